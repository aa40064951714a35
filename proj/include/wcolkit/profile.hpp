#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wcolkit/error.hpp"
#include "wcolkit/generators.hpp"
#include "wcolkit/numeric.hpp"
#include "wcolkit/wcol.hpp"

namespace wcolkit {

enum class ProfileMethod { Exact, Heuristic, Canonical };

inline const char* to_string(ProfileMethod m) {
  switch (m) {
    case ProfileMethod::Exact:
      return "exact";
    case ProfileMethod::Heuristic:
      return "heuristic";
    case ProfileMethod::Canonical:
      return "canonical";
  }
  return "exact";
}

inline ProfileMethod parse_profile_method(const std::string& s) {
  if (s == "exact") return ProfileMethod::Exact;
  if (s == "heuristic") return ProfileMethod::Heuristic;
  if (s == "canonical") return ProfileMethod::Canonical;
  throw Error("usage", "unknown profile method '" + s + "'");
}

struct ProfilePoint {
  int d = 0;
  int value = 0;
  bool exact = false;  // value is wcol_d of every member, not just an upper bound
};

/// A canonical-order value above binom(d+t, t) on a member built by t-tree
/// attachment.
struct BoundViolation {
  std::string member;
  int d = 0;
  int value = 0;
  BigInt bound;
};

struct WcolProfile {
  std::string label;
  ProfileMethod method = ProfileMethod::Canonical;
  std::vector<ProfilePoint> points;
  double fitted_degree = 0.0;
  double residual = 0.0;
  std::vector<BoundViolation> violations;
};

struct Fit {
  double slope = 0.0;
  double residual = 0.0;  // RMS of the log-log residuals
};

/// Least squares of log(value) on log(d) over d in [d_max/2, d_max], d >= 1.
inline Fit fit_degree(const std::vector<ProfilePoint>& points) {
  int d_max = 0;
  for (const auto& p : points) d_max = std::max(d_max, p.d);
  std::vector<double> xs, ys;
  for (const auto& p : points)
    if (p.d >= 1 && 2 * p.d >= d_max && p.value >= 1) {
      xs.push_back(std::log(static_cast<double>(p.d)));
      ys.push_back(std::log(static_cast<double>(p.value)));
    }
  Fit fit;
  const auto k = static_cast<double>(xs.size());
  if (xs.size() < 2) return fit;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) return fit;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + fit.slope * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

struct ProfileOptions {
  std::uint64_t exact_budget = kDefaultNodeBudget;
};

/// Per-d maximum of wcol_d over the family members, d = 1..d_max, and the
/// fitted degree. With a canonical method, members built by t-tree attachment
/// are checked against binom(d+t, t).
inline WcolProfile profile_family(const std::vector<std::string>& specs, int d_max, ProfileMethod method,
                                  const ProfileOptions& options = {}) {
  if (specs.empty()) throw Error("invalid-parameters", "empty family");
  if (d_max < 1) throw Error("invalid-parameters", "d_max must be at least 1");
  std::vector<GeneratedGraph> members;
  for (const auto& s : specs) members.push_back(gen_family(s));

  WcolProfile profile;
  profile.method = method;
  for (std::size_t i = 0; i < members.size(); ++i) profile.label += (i ? "; " : "") + members[i].label;

  for (int d = 1; d <= d_max; ++d) {
    ProfilePoint point{d, 0, method == ProfileMethod::Exact};
    for (const auto& m : members) {
      WcolResult r;
      switch (method) {
        case ProfileMethod::Exact:
          r = wcol_exact(m.graph, d, options.exact_budget);
          break;
        case ProfileMethod::Heuristic:
          r = wcol_heuristic(m.graph, d, m.canonical ? &*m.canonical : nullptr);
          break;
        case ProfileMethod::Canonical:
          if (!m.canonical) throw Error("invalid-parameters", "'" + m.label + "' has no canonical order");
          r = wcol_of_order(m.graph, *m.canonical, d);
          break;
      }
      point.value = std::max(point.value, r.value);
      point.exact = point.exact && r.exact;
      if (method == ProfileMethod::Canonical && m.ktree_order && m.treewidth_bound) {
        const int t = *m.treewidth_bound;
        const BigInt bound = binomial(BigInt(d + t), t);
        if (BigInt(r.value) > bound) profile.violations.push_back({m.label, d, r.value, bound});
      }
    }
    profile.points.push_back(point);
  }
  const Fit fit = fit_degree(profile.points);
  profile.fitted_degree = fit.slope;
  profile.residual = fit.residual;
  return profile;
}

inline constexpr double kDominationMargin = 0.5;

enum class Domination { GCannotDominateF, FCannotDominateG, NoSeparation };

struct DominationVerdict {
  Domination kind = Domination::NoSeparation;
  double degree_f = 0.0;
  double degree_g = 0.0;

  /// Always marked empirical: domination is asymptotic and samples cannot
  /// decide it.
  std::string text() const {
    switch (kind) {
      case Domination::GCannotDominateF:
        return "g-cannot-dominate-f (empirical)";
      case Domination::FCannotDominateG:
        return "f-cannot-dominate-g (empirical)";
      case Domination::NoSeparation:
        break;
    }
    return "no-separation (empirical)";
  }
};

inline DominationVerdict compare_domination(const WcolProfile& f, const WcolProfile& g) {
  DominationVerdict v;
  v.degree_f = f.fitted_degree;
  v.degree_g = g.fitted_degree;
  if (v.degree_f > v.degree_g + kDominationMargin) {
    v.kind = Domination::GCannotDominateF;
  } else if (v.degree_g > v.degree_f + kDominationMargin) {
    v.kind = Domination::FCannotDominateG;
  }
  return v;
}

namespace detail {

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

/// TSV: a metadata comment, the header "d\twcol\texact", one row per d.
inline void write_profile(std::ostream& out, const WcolProfile& p) {
  out << "# label=" << p.label << "\tmethod=" << to_string(p.method)
      << "\tfitted_degree=" << detail::fixed6(p.fitted_degree) << "\tresidual=" << detail::fixed6(p.residual)
      << '\n';
  out << "d\twcol\texact\n";
  for (const auto& pt : p.points) out << pt.d << '\t' << pt.value << '\t' << (pt.exact ? 1 : 0) << '\n';
}

/// Reads write_profile output. Without a metadata line the degree is refitted.
inline WcolProfile read_profile(std::istream& in) {
  WcolProfile p;
  bool have_meta = false, have_header = false;
  std::string line;
  int number = 0;
  auto bad = [&](const std::string& what) { throw Error("format", "line " + std::to_string(number) + ": " + what); };
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream fields(line.substr(1));
      for (std::string f; std::getline(fields, f, '\t');) {
        while (!f.empty() && f.front() == ' ') f.erase(f.begin());
        const auto eq = f.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = f.substr(0, eq), value = f.substr(eq + 1);
        try {
          if (key == "label") p.label = value;
          if (key == "method") p.method = parse_profile_method(value);
          if (key == "fitted_degree") p.fitted_degree = std::stod(value), have_meta = true;
          if (key == "residual") p.residual = std::stod(value);
        } catch (const std::invalid_argument&) {
          bad("bad value for " + key);
        } catch (const Error&) {
          bad("bad value for " + key);
        }
      }
      continue;
    }
    if (!have_header) {
      if (line != "d\twcol\texact") bad("expected header 'd<TAB>wcol<TAB>exact'");
      have_header = true;
      continue;
    }
    std::istringstream row(line);
    ProfilePoint pt;
    int exact = 0;
    if (!(row >> pt.d >> pt.value >> exact) || (exact != 0 && exact != 1)) bad("malformed row");
    std::string extra;
    if (row >> extra) bad("trailing data");
    pt.exact = exact == 1;
    if (!p.points.empty() && pt.d <= p.points.back().d) bad("d values must increase");
    p.points.push_back(pt);
  }
  if (!have_header) throw Error("format", "missing profile header");
  if (!have_meta) {
    const Fit fit = fit_degree(p.points);
    p.fitted_degree = fit.slope;
    p.residual = fit.residual;
  }
  return p;
}

}  // namespace wcolkit
