#pragma once

#include "droughtcap/aggregate.hpp"
#include "droughtcap/combustion_turbine.hpp"
#include "droughtcap/fleet.hpp"
#include "droughtcap/fleet_io.hpp"
#include "droughtcap/hydro.hpp"
#include "droughtcap/once_through.hpp"
#include "droughtcap/psychrometrics.hpp"
#include "droughtcap/pv.hpp"
#include "droughtcap/recirc.hpp"
#include "droughtcap/report_io.hpp"
#include "droughtcap/scenario.hpp"
#include "droughtcap/wind.hpp"
