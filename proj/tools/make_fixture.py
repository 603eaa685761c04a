#!/usr/bin/env python3
"""Generate the synthetic 30-generator fleet and 92-day summer used by the
acceptance suite and the README walkthrough.

Output is deterministic (fixed seed); rerunning overwrites data/fixtures/.
"""
import argparse
import datetime as dt
import math
import pathlib
import random

START = dt.date(2025, 6, 1)
DAYS = 92

FLEET_HEADER = (
    "id,name,technology,installed_capacity_mw,site_id,water_source,fuel,head_m,hydro_efficiency,"
    "net_efficiency,k_os,tl_max_c,dtl_max_c,n_cc,sigma,t_app_c,k_sens,gamma,c_t,hub_height_m,curve_id"
)

# site: (air temp base, flow base m3/s, water temp offset, hub-height wind base at 50 m)
SITES = {
    "S01": (25.0, 120.0, 7.0, 6.0),
    "S02": (26.0, 60.0, 7.5, 5.5),
    "S03": (27.0, 200.0, 8.0, 5.0),
    "S04": (24.0, 35.0, 6.5, 7.0),
    "S05": (28.0, 90.0, 8.5, 4.5),
    "S06": (26.5, 150.0, 7.0, 6.5),
    "S07": (30.0, 140.0, 12.5, 5.0),  # warm river: once-through limit binds
    "S08": (27.5, 250.0, 8.0, 8.0),
    "S09": (29.0, 80.0, 9.0, 7.5),
    "S10": (28.5, 1.2, 8.5, 6.0),  # small creek: recirculating unit is water-limited
}


def power_curve(cut_in, rated, cut_out=25.0):
    pts = [(0.0, 0.0), (cut_in, 0.0)]
    v = math.floor(cut_in) + 1.0
    while v < rated:
        frac = (v**3 - cut_in**3) / (rated**3 - cut_in**3)
        pts.append((v, round(frac, 4)))
        v += 1.0
    pts.append((rated, 1.0))
    v = math.floor(rated) + 1.0
    while v < cut_out:
        pts.append((v, 1.0))
        v += 1.0
    pts.append((cut_out, 0.0))
    return pts


CURVES = {
    "class_low": power_curve(2.5, 9.5),
    "class_mid": power_curve(3.0, 11.5),
    "class_high": power_curve(3.5, 13.0),
}


def fmt(x, digits=3):
    return f"{x:.{digits}f}"


def weather_and_hydrology(rng):
    weather = ["site_id,date,dry_bulb_c,rh_pct,pressure_kpa,irradiance_wm2,wind2_ms,wind10_ms,wind50_ms"]
    hydrology = ["site_id,date,streamflow_m3s,water_temp_c"]
    z0 = 0.1
    for site, (t_base, q_base, tw_off, v_base) in SITES.items():
        q = q_base
        for d in range(DAYS):
            date = (START + dt.timedelta(days=d)).isoformat()
            season = math.sin(math.pi * d / (DAYS - 1))
            t_air = t_base + 3.0 * season + rng.gauss(0.0, 1.5)
            rh = min(95.0, max(30.0, 65.0 - 1.2 * (t_air - t_base) + rng.gauss(0.0, 10.0)))
            pressure = 100.3 + rng.gauss(0.0, 0.5)
            irradiance = max(60.0, 240.0 + 40.0 * season + rng.gauss(0.0, 35.0))
            v50 = max(0.0, v_base + rng.gauss(0.0, 2.0))
            if d == 40 and site in ("S08", "S09"):
                v50 = 27.5  # storm above cut-out
            if d == 55:
                v50 = 0.0  # calm
            v10 = v50 * math.log(10 / z0) / math.log(50 / z0)
            v2 = v50 * math.log(2 / z0) / math.log(50 / z0)
            weather.append(
                ",".join(
                    [site, date, fmt(t_air, 2), fmt(rh, 1), fmt(pressure, 2), fmt(irradiance, 1),
                     fmt(v2, 2), fmt(v10, 2), fmt(v50, 2)]
                )
            )
            # Summer recession with rain pulses.
            q = q * 0.985 + (q_base * rng.uniform(0.2, 0.4) if rng.random() < 0.04 else 0.0)
            q = max(0.05 * q_base, q)
            t_w = 0.6 * t_air + tw_off + rng.gauss(0.0, 0.8)
            hydrology.append(",".join([site, date, fmt(q, 3), fmt(t_w, 2)]))
    return weather, hydrology


def fleet_rows():
    rows = []

    def row(gid, name, tech, cap, site, water="", fuel="", **kw):
        cols = ["head_m", "hydro_efficiency", "net_efficiency", "k_os", "tl_max_c", "dtl_max_c", "n_cc",
                "sigma", "t_app_c", "k_sens", "gamma", "c_t", "hub_height_m", "curve_id"]
        vals = [str(kw.get(c, "")) for c in cols]
        rows.append(",".join([gid, name, tech, str(cap), site, water, fuel] + vals))

    # Hydro: nameplate above typical flow power so drought bites.
    row("H01", "Upper Falls 1", "Hydro", 80, "S01", head_m=45)
    row("H02", "Upper Falls 2", "Hydro", 40, "S02", head_m=38, hydro_efficiency=0.88)
    row("H03", "Mill Dam", "Hydro", 70, "S03", head_m=22)
    row("H04", "Gorge", "Hydro", 30, "S04", head_m=60)
    row("H05", "Low Lock", "Hydro", 25, "S05", head_m=18, hydro_efficiency=0.92)
    row("H06", "Twin Bridges", "Hydro", 60, "S06", head_m=30)
    # Once-through steam.
    row("T01", "Riverside 2", "SteamOnceThrough", 700, "S07", "FreshSurface", "Coal",
        net_efficiency=0.34, dtl_max_c=10)
    row("T02", "Bend Station", "SteamOnceThrough", 450, "S03", "FreshSurface", "NaturalGas",
        net_efficiency=0.38, dtl_max_c=9)
    row("T03", "North Point", "SteamOnceThrough", 1100, "S08", "FreshSurface", "Nuclear",
        net_efficiency=0.33, k_os=0.05, dtl_max_c=12)
    row("T04", "Cedar Creek", "SteamOnceThrough", 300, "S05", "FreshSurface", "Coal",
        net_efficiency=0.32, dtl_max_c=8, gamma=0.25)
    row("T05", "Harbor", "SteamOnceThrough", 600, "S09", "Ocean", "NaturalGas",
        net_efficiency=0.36, dtl_max_c=10)
    # Recirculating steam.
    row("R01", "Ridge 1", "SteamRecirculating", 600, "S01", "FreshSurface", "Coal", net_efficiency=0.33)
    row("R02", "Ridge 2", "SteamRecirculating", 550, "S06", "FreshSurface", "NaturalGas",
        net_efficiency=0.40, sigma=1.0)
    row("R03", "Valley CC Steam", "SteamRecirculating", 250, "S09", "FreshSurface", "NaturalGas",
        net_efficiency=0.35, n_cc=4)
    row("R04", "Creekside", "SteamRecirculating", 400, "S10", "FreshSurface", "Coal", net_efficiency=0.34)
    row("R05", "Aquifer Station", "SteamRecirculating", 500, "S02", "Ground", "Coal", net_efficiency=0.33)
    # Combustion turbines.
    row("C01", "Peaker A", "CombustionTurbine", 180, "S01", fuel="NaturalGas")
    row("C02", "Peaker B", "CombustionTurbine", 90, "S03", fuel="NaturalGas")
    row("C03", "Valley CC CT", "CombustionTurbine", 420, "S09", fuel="NaturalGas")
    row("C04", "Peaker C", "CombustionTurbine", 60, "S05", fuel="Other")
    row("C05", "Peaker D", "CombustionTurbine", 240, "S07", fuel="NaturalGas")
    row("C06", "Peaker E", "CombustionTurbine", 150, "S10", fuel="NaturalGas")
    # Solar PV.
    row("P01", "Sunfield", "SolarPV", 100, "S02")
    row("P02", "Meadow PV", "SolarPV", 75, "S05", c_t=0.03)
    row("P03", "Ridge PV", "SolarPV", 50, "S09", c_t=0.045)
    row("P04", "Flats PV", "SolarPV", 150, "S10")
    # Wind.
    row("W01", "Hilltop Wind", "Wind", 200, "S04", hub_height_m=90, curve_id="class_low")
    row("W02", "Plains Wind", "Wind", 300, "S08", hub_height_m=100, curve_id="class_mid")
    row("W03", "Coast Wind", "Wind", 150, "S09", hub_height_m=120, curve_id="class_high")
    # Not drought-sensitive.
    row("O01", "Landfill Gas", "Other", 20, "S06")
    return rows


SCENARIOS = """# Standard drought sensitivity sweep.
[baseline]
air_temp_delta_c = 0
streamflow_scale = 1.0

[C1]
air_temp_delta_c = 1
streamflow_scale = 1.0
water_temp_response = 0.6

[C2]
air_temp_delta_c = 2
streamflow_scale = 1.0
water_temp_response = 0.6

[C3]
air_temp_delta_c = 3
streamflow_scale = 1.0
water_temp_response = 0.6

[R10]
air_temp_delta_c = 0
streamflow_scale = 0.9

[R20]
air_temp_delta_c = 0
streamflow_scale = 0.8

[R30]
air_temp_delta_c = 0
streamflow_scale = 0.7
"""


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--root", default=str(pathlib.Path(__file__).resolve().parents[1]))
    args = parser.parse_args()
    root = pathlib.Path(args.root)
    fixtures = root / "data" / "fixtures"
    fixtures.mkdir(parents=True, exist_ok=True)
    (root / "data" / "curves").mkdir(parents=True, exist_ok=True)

    rng = random.Random(20250601)
    weather, hydrology = weather_and_hydrology(rng)
    (fixtures / "weather.csv").write_text("\n".join(weather) + "\n")
    (fixtures / "hydrology.csv").write_text("\n".join(hydrology) + "\n")
    (fixtures / "fleet.csv").write_text("\n".join([FLEET_HEADER] + fleet_rows()) + "\n")
    (fixtures / "scenarios.toml").write_text(SCENARIOS)

    curves = ["curve_id,speed_ms,power_fraction"]
    for cid, pts in CURVES.items():
        curves += [f"{cid},{v:g},{p:g}" for v, p in pts]
    text = "\n".join(curves) + "\n"
    (fixtures / "curves.csv").write_text(text)
    (root / "data" / "curves" / "default_curves.csv").write_text(text)

    (root / "data" / "pv_coeffs.csv").write_text(
        "k1,k2,k3,k4,k5,k6\n-0.017237,-0.040465,-0.004702,0.000149,0.000170,0.000005\n"
    )


if __name__ == "__main__":
    main()
