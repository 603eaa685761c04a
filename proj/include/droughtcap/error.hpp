#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace droughtcap {

enum class ErrorKind {
  Io,
  Parse,
  MissingColumn,
  BadEnum,
  InvariantViolation,
  UnresolvedSite,
  UnknownCurve,
  MissingSeries,
  NegativeFlow,
  NegativeIrradiance,
  NonpositiveIrradiance,
  NegativeSpeed,
  OutOfRange,
  NoConvergence,
  EmptyCategory,
  DegenerateInput,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::BadEnum: return "BadEnum";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::UnresolvedSite: return "UnresolvedSite";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::MissingSeries: return "MissingSeries";
    case ErrorKind::NegativeFlow: return "NegativeFlow";
    case ErrorKind::NegativeIrradiance: return "NegativeIrradiance";
    case ErrorKind::NonpositiveIrradiance: return "NonpositiveIrradiance";
    case ErrorKind::NegativeSpeed: return "NegativeSpeed";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::EmptyCategory: return "EmptyCategory";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
  }
  return "Unknown";
}

/// Where an error was raised. Every field is optional; the formatted message
/// includes whichever are set.
struct ErrorContext {
  std::optional<std::string> file;
  std::optional<long> row;
  std::optional<std::string> field;
  std::optional<std::string> generator;
  std::optional<std::string> site;
  std::optional<std::string> channel;
  std::optional<std::string> date;
};

/// Single exception type for the library. `kind()` identifies the failure
/// class, `context()` carries the location (file/row, generator/date, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, ErrorContext ctx = {})
      : std::runtime_error(format(kind, detail, ctx)),
        kind_(kind),
        detail_(std::move(detail)),
        ctx_(std::move(ctx)) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }
  [[nodiscard]] const ErrorContext& context() const noexcept { return ctx_; }

  /// Copy of this error with extra context filled in where still unset.
  [[nodiscard]] Error annotated(const ErrorContext& extra) const {
    ErrorContext merged = ctx_;
    auto fill = [](auto& dst, const auto& src) {
      if (!dst && src) dst = src;
    };
    fill(merged.file, extra.file);
    fill(merged.row, extra.row);
    fill(merged.field, extra.field);
    fill(merged.generator, extra.generator);
    fill(merged.site, extra.site);
    fill(merged.channel, extra.channel);
    fill(merged.date, extra.date);
    return Error(kind_, detail_, std::move(merged));
  }

 private:
  static std::string format(ErrorKind kind, const std::string& detail, const ErrorContext& ctx) {
    std::string out{to_string(kind)};
    auto add = [&out](std::string_view key, const std::string& value) {
      out += ' ';
      out += key;
      out += '=';
      out += value;
    };
    if (ctx.file) add("file", *ctx.file);
    if (ctx.row) add("row", std::to_string(*ctx.row));
    if (ctx.field) add("field", *ctx.field);
    if (ctx.generator) add("generator", *ctx.generator);
    if (ctx.site) add("site", *ctx.site);
    if (ctx.channel) add("channel", *ctx.channel);
    if (ctx.date) add("date", *ctx.date);
    if (!detail.empty()) {
      out += ": ";
      out += detail;
    }
    return out;
  }

  ErrorKind kind_;
  std::string detail_;
  ErrorContext ctx_;
};

}  // namespace droughtcap
