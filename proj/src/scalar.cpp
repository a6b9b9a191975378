#include "greedy/scalar.hpp"

#include <cctype>

#include "greedy/error.hpp"

namespace greedy {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CollinearDefiningPoints: return "CollinearDefiningPoints";
    case ErrorCode::CoincidentSites: return "CoincidentSites";
    case ErrorCode::DuplicateSite: return "DuplicateSite";
    case ErrorCode::EmptySiteSet: return "EmptySiteSet";
    case ErrorCode::TooFewSites: return "TooFewSites";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotBoundedSegment: return "NotBoundedSegment";
    case ErrorCode::InvalidSiteId: return "InvalidSiteId";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not an exact number: '" + std::string(text) + "'");
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Scalar result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text);
    result = Scalar(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = Scalar(digits, scale);
  } else {
    if (!all_digits(body)) bad(text);
    result = Scalar(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

double to_double(const Scalar& value) { return value.get_d(); }

}  // namespace greedy
