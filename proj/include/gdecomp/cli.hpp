#pragma once

// Command-line front end. run() never throws: every outcome maps to an exit
// code (0 positive verdict, 1 negative verdict, 2 usage or input error,
// 3 internal invariant violation).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdecomp/canonical.hpp"
#include "gdecomp/decomposition.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/extremity.hpp"
#include "gdecomp/io.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/qso.hpp"
#include "gdecomp/saturation.hpp"

namespace gdecomp::cli {

enum ExitCode : int { kPositive = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
  unsigned parallel = 1;
  bool force = false;
  bool decimal = false;
  std::size_t cap = kDefaultExhaustiveCap;

  std::string input = "-";
  std::string set = "Um";
  std::string method = "auto";
  bool bounds = false;
  std::string mode = "stochastic";
  std::string decomp_method = "flow";
  std::string ambient = "Um";
  bool oracle = false;
  std::size_t order = 0;
  std::optional<std::size_t> i;
  std::optional<std::size_t> j;
  std::string check = "stochastic";
  std::string x_file;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out)
      : opt_(opt), in_(in), out_(out) {}

  int check();
  int decompose();
  int extreme();
  int enumerate();
  int neighborhoods();
  int scan();
  int op();
  int verify();

 private:
  std::string read(const std::string& path) {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }

  SymMatrix matrix() { return parse_matrix(read(opt_.input)); }

  std::string num(const Rational& r) const { return opt_.decimal ? to_decimal(r) : to_string(r); }

  void print_matrix(const Matrix& a, const std::string& indent = "  ") {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out_ << indent;
      for (std::size_t j = 0; j < a.cols(); ++j) out_ << (j ? " " : "") << num(a(i, j));
      out_ << '\n';
    }
  }

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  static Ambient ambient_of(const std::string& s) { return s == "UM" ? Ambient::UM : Ambient::Um; }
  static DecompMode mode_of(const std::string& s) {
    return s == "substochastic" ? DecompMode::Substochastic : DecompMode::Stochastic;
  }
  static std::string pos(const Position& p) {
    return "(" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
  }
  static Json pos_json(const Position& p) { return Json::array({p.i + 1, p.j + 1}); }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

inline std::string reason_name(MembershipReason r) {
  switch (r) {
    case MembershipReason::Member: return "member";
    case MembershipReason::ViolatingSubset: return "violating_subset";
    case MembershipReason::TotalSumMismatch: return "total_sum_mismatch";
  }
  return "unknown";
}

inline int Session::check() {
  const SymMatrix a = matrix();
  const Ambient ambient = ambient_of(opt_.set);
  const MembershipMethod method = opt_.method == "bruteforce" ? MembershipMethod::BruteForce
                                  : opt_.method == "mincut"   ? MembershipMethod::MinCut
                                                              : MembershipMethod::Auto;
  MembershipVerdict v = method == MembershipMethod::MinCut
                            ? check_Um_mincut(a, true)
                            : check_Um(a, method, opt_.cap);
  if (ambient == Ambient::UM && v.member && v.total_sum != Rational(static_cast<long>(a.order()))) {
    v.member = false;
    v.reason = MembershipReason::TotalSumMismatch;
  }
  std::optional<BoundsCertificate> qf;
  if (opt_.bounds) qf = qf_bounds_certificate(a, opt_.trials, opt_.seed, opt_.cap);

  if (opt_.json) {
    Json j{{"verb", "check"}, {"set", std::string(to_string(ambient))}, {"member", v.member},
           {"reason", reason_name(v.reason)}, {"total_sum", to_string(v.total_sum)}};
    if (v.slack) j["slack"] = to_string(*v.slack);
    if (v.certificate) {
      j["certificate"] = index_set_json(*v.certificate);
      j["principal_sum"] = to_string(principal_sum(a, *v.certificate));
    }
    if (qf) {
      Json b{{"outcome", qf->outcome == BoundsOutcome::Counterexample ? "counterexample"
                                                                      : "confirmed_on_samples"},
             {"trials", qf->trials}};
      if (qf->x) b["x"] = vector_json(qf->x->coords());
      if (qf->value) b["value"] = to_string(*qf->value);
      j["bounds"] = std::move(b);
    }
    emit(j);
  } else {
    out_ << (v.member ? "member" : "not a member") << " of " << to_string(ambient) << '\n';
    out_ << "total sum: " << num(v.total_sum) << '\n';
    if (v.slack) out_ << "slack: " << num(*v.slack) << '\n';
    if (v.certificate) {
      out_ << "certificate: " << v.certificate->to_string() << " with principal sum "
           << num(principal_sum(a, *v.certificate)) << " > " << v.certificate->size() << '\n';
    } else if (v.reason == MembershipReason::TotalSumMismatch) {
      out_ << "certificate: total sum " << num(v.total_sum) << " != " << a.order() << '\n';
    }
    if (qf) {
      if (qf->outcome == BoundsOutcome::Counterexample) {
        out_ << "bounds: counterexample x = (";
        for (std::size_t k = 0; k < qf->x->size(); ++k) out_ << (k ? ", " : "") << num((*qf->x)[k]);
        out_ << ") with (Ax,x) = " << num(*qf->value) << '\n';
      } else {
        out_ << "bounds: no violation in " << qf->trials << " samples\n";
      }
    }
  }
  return v.member ? kPositive : kNegative;
}

inline int Session::decompose() {
  const SymMatrix a = matrix();
  const DecompMode mode = mode_of(opt_.mode);
  DecompResult r;
  if (opt_.decomp_method == "inductive") {
    r = mode == DecompMode::Stochastic ? g_decompose_extreme_inductive(a, opt_.cap)
                                       : g_decompose_extreme_substochastic(a, opt_.cap);
  } else if (opt_.decomp_method == "vertices") {
    r = g_decompose_via_vertices(a, mode, opt_.cap);
  } else {
    r = g_decompose(a, mode);
  }
  if (opt_.json) {
    Json j{{"verb", "decompose"}, {"mode", std::string(to_string(mode))},
           {"status", r.solved() ? "solved" : "not_member"}};
    if (r.X) j["X"] = matrix_json(*r.X);
    if (!r.solved()) j["reason"] = reason_name(r.reason);
    if (r.certificate) j["certificate"] = index_set_json(*r.certificate);
    emit(j);
  } else if (r.solved()) {
    out_ << "solved (" << to_string(mode) << ")\nX =\n";
    print_matrix(*r.X);
  } else {
    out_ << "no " << to_string(mode) << " decomposition: ";
    if (r.certificate) {
      out_ << "principal sum over " << r.certificate->to_string() << " is "
           << num(principal_sum(a, *r.certificate)) << " > " << r.certificate->size() << '\n';
    } else {
      out_ << "total sum " << num(a.total_sum()) << " != " << a.order() << '\n';
    }
  }
  return r.solved() ? kPositive : kNegative;
}

inline int Session::extreme() {
  const SymMatrix a = matrix();
  const Ambient ambient = ambient_of(opt_.ambient);
  const ExtremityReport rep = is_extreme_criterion(a, ambient, opt_.cap);
  std::optional<bool> oracle;
  if (opt_.oracle) {
    oracle = is_extreme_nullspace(a, ambient, opt_.cap);
    if (*oracle != rep.extreme) {
      throw Error(ErrorCode::InternalInvariantViolation, "criterion and rank oracle disagree");
    }
  }
  auto nb = [&](std::size_t k) {
    return rep.neighborhoods[k] ? rep.neighborhoods[k]->to_string() : std::string("none");
  };
  if (opt_.json) {
    Json entries = Json::array();
    for (std::size_t k = 0; k < rep.fractional_entries.size(); ++k) {
      Json e{{"position", pos_json(rep.fractional_entries[k])}};
      e["minimal_neighborhood"] =
          rep.neighborhoods[k] ? index_set_json(*rep.neighborhoods[k]) : Json(nullptr);
      entries.push_back(std::move(e));
    }
    Json j{{"verb", "extreme"}, {"ambient", std::string(to_string(ambient))},
           {"extreme", rep.extreme}, {"fractional_entries", std::move(entries)}};
    if (rep.failure) {
      if (const auto* m = std::get_if<MissingNeighborhood>(&*rep.failure)) {
        j["failure"] = Json{{"kind", "missing_neighborhood"}, {"position", pos_json(m->at)}};
      } else {
        const auto& d = std::get<DuplicateNeighborhood>(*rep.failure);
        j["failure"] = Json{{"kind", "duplicate_neighborhood"},
                            {"positions", Json::array({pos_json(d.first), pos_json(d.second)})}};
      }
    }
    if (oracle) j["oracle"] = *oracle;
    emit(j);
  } else {
    out_ << (rep.extreme ? "extreme" : "not extreme") << " in " << to_string(ambient) << '\n';
    for (std::size_t k = 0; k < rep.fractional_entries.size(); ++k) {
      out_ << "  a" << pos(rep.fractional_entries[k]) << " = "
           << num(a(rep.fractional_entries[k].i, rep.fractional_entries[k].j))
           << ", minimal saturated neighborhood " << nb(k) << '\n';
    }
    if (rep.failure) {
      if (const auto* m = std::get_if<MissingNeighborhood>(&*rep.failure)) {
        out_ << "failure: entry " << pos(m->at) << " has no saturated neighborhood\n";
      } else {
        const auto& d = std::get<DuplicateNeighborhood>(*rep.failure);
        out_ << "failure: entries " << pos(d.first) << " and " << pos(d.second)
             << " share a minimal saturated neighborhood\n";
      }
    }
    if (oracle) out_ << "rank oracle agrees\n";
  }
  return rep.extreme ? kPositive : kNegative;
}

inline int Session::enumerate() {
  const Ambient ambient = ambient_of(opt_.ambient);
  if (opt_.order > kEnumerationCap && !opt_.force) {
    out_ << "grid size for m = " << opt_.order << ": " << grid_size_estimate(opt_.order) << '\n';
  }
  const auto list = enumerate_extreme(opt_.order, ambient, opt_.parallel, opt_.force);
  if (opt_.json) {
    Json vs = Json::array();
    for (const auto& v : list) vs.push_back(matrix_json(v));
    emit(Json{{"verb", "enumerate"}, {"m", opt_.order}, {"ambient", std::string(to_string(ambient))},
              {"count", list.size()}, {"vertices", std::move(vs)}});
  } else {
    out_ << list.size() << " extreme points of " << to_string(ambient) << " for m = " << opt_.order
         << '\n';
    for (std::size_t k = 0; k < list.size(); ++k) {
      out_ << "#" << k + 1 << '\n';
      print_matrix(list[k].to_matrix());
    }
  }
  return kPositive;
}

inline int Session::neighborhoods() {
  const SymMatrix a = matrix();
  const SaturationFamily family(a, opt_.cap);
  const std::size_t m = a.order();
  if (opt_.i.has_value() != opt_.j.has_value()) {
    throw Error(ErrorCode::InvalidIndexSet, "--i and --j go together");
  }
  std::vector<Position> positions;
  if (opt_.i) {
    if (*opt_.i < 1 || *opt_.i > m || *opt_.j < 1 || *opt_.j > m) {
      throw Error(ErrorCode::InvalidIndexSet, "index out of range 1.." + std::to_string(m));
    }
    positions.push_back({std::min(*opt_.i, *opt_.j) - 1, std::max(*opt_.i, *opt_.j) - 1});
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) positions.push_back({i, j});
    }
  }
  bool all_found = true;
  Json sets = Json::array();
  for (const auto& s : family.sets()) sets.push_back(index_set_json(s));
  Json per = Json::array();
  if (!opt_.json) {
    out_ << "saturated sets:";
    for (const auto& s : family.sets()) out_ << ' ' << s.to_string();
    out_ << (family.masks().empty() ? " none\n" : "\n");
  }
  for (const auto& p : positions) {
    const auto lo = family.minimal(p.i, p.j);
    const auto hi = family.maximal(p.i, p.j);
    all_found = all_found && lo.has_value();
    if (opt_.json) {
      per.push_back(Json{{"position", pos_json(p)},
                         {"minimal", lo ? index_set_json(*lo) : Json(nullptr)},
                         {"maximal", hi ? index_set_json(*hi) : Json(nullptr)}});
    } else {
      out_ << "  " << pos(p) << ": minimal " << (lo ? lo->to_string() : "none") << ", maximal "
           << (hi ? hi->to_string() : "none") << '\n';
    }
  }
  if (opt_.json) {
    emit(Json{{"verb", "neighborhoods"}, {"saturated_sets", std::move(sets)},
              {"entries", std::move(per)}});
  }
  return !opt_.i || all_found ? kPositive : kNegative;
}

inline int Session::scan() {
  const ScanReport r = conjecture_scan(opt_.order, opt_.parallel, opt_.force);
  if (opt_.json) {
    Json lo = Json::array();
    Json hi = Json::array();
    for (const auto& a : r.counterexamples_lower) lo.push_back(matrix_json(a));
    for (const auto& a : r.counterexamples_upper) hi.push_back(matrix_json(a));
    emit(Json{{"verb", "scan"},
              {"m", r.order},
              {"grid_size", r.grid_size},
              {"members_Um", r.members_lower},
              {"members_UM", r.members_upper},
              {"extreme_Um", r.extreme_lower},
              {"extreme_UM", r.extreme_upper},
              {"counterexamples_Um", std::move(lo)},
              {"counterexamples_UM", std::move(hi)}});
  } else {
    out_ << "grid matrices: " << r.grid_size << '\n'
         << "members of Um: " << r.members_lower << " (extreme " << r.extreme_lower << ")\n"
         << "members of UM: " << r.members_upper << " (extreme " << r.extreme_upper << ")\n"
         << "conjecture (Um) counterexamples: " << r.counterexamples_lower.size() << '\n'
         << "conjecture (UM) counterexamples: " << r.counterexamples_upper.size() << '\n';
    for (const auto& a : r.counterexamples_lower) {
      out_ << "Um counterexample\n";
      print_matrix(a.to_matrix());
    }
    for (const auto& a : r.counterexamples_upper) {
      out_ << "UM counterexample\n";
      print_matrix(a.to_matrix());
    }
  }
  return r.counterexamples_lower.empty() && r.counterexamples_upper.empty() ? kPositive
                                                                            : kNegative;
}

inline int Session::op() {
  const QuadraticOperator v = parse_operator(read(opt_.input));
  bool ok = false;
  Json j{{"verb", "operator"}, {"check", opt_.check}};
  std::string text;
  if (opt_.check == "stochastic") {
    ok = qo_is_stochastic(v);
    text = ok ? "stochastic" : "not stochastic";
  } else if (opt_.check == "gds-necessary") {
    ok = qo_gds_necessary(v, opt_.cap);
    text = ok ? "every layer lies in UM (necessary condition holds)"
              : "some layer lies outside UM (not G-doubly stochastic)";
  } else {
    const auto x = qo_gds_sample(v, opt_.trials, opt_.seed);
    ok = !x;
    j["trials"] = opt_.trials;
    j["seed"] = opt_.seed;
    if (x) {
      j["counterexample"] = vector_json(x->coords());
      j["image"] = vector_json(qo_apply(v, *x));
      text = "counterexample x = (";
      for (std::size_t k = 0; k < x->size(); ++k) text += (k ? ", " : "") + num((*x)[k]);
      text += "): Vx is not majorized by x";
    } else {
      text = "no counterexample in " + std::to_string(opt_.trials) + " trials";
    }
  }
  if (opt_.json) {
    j["result"] = ok;
    emit(j);
  } else {
    out_ << text << '\n';
  }
  return ok ? kPositive : kNegative;
}

inline int Session::verify() {
  const SymMatrix a = matrix();
  if (opt_.x_file.empty()) throw Error(ErrorCode::ParseError, "--x is required");
  const Matrix x = parse_square_matrix(read(opt_.x_file));
  const DecompMode mode = mode_of(opt_.mode);
  const bool ok = verify_decomposition(a, x, mode);
  if (opt_.json) {
    emit(Json{{"verb", "verify"}, {"mode", std::string(to_string(mode))}, {"valid", ok}});
  } else {
    out_ << (ok ? "valid " : "invalid ") << to_string(mode) << " decomposition\n";
  }
  return ok ? kPositive : kNegative;
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMember:
    case ErrorCode::NotExtreme:
    case ErrorCode::IsExtreme:
    case ErrorCode::NotStochastic:
    case ErrorCode::NotOnGrid: return kNegative;
    case ErrorCode::InternalInvariantViolation: return kInternal;
    default: return kUsage;
  }
}

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Options opt;
  CLI::App app{"Exact G-decomposition toolkit for symmetric nonnegative matrices", "gdecomp"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", opt.json, "Emit one JSON object per invocation");
  app.add_option("--seed", opt.seed, "Seed for sampling verbs")->capture_default_str();
  app.add_option("--trials", opt.trials, "Sample count for sampling verbs")->capture_default_str();
  app.add_option("--parallel", opt.parallel, "Thread budget for enumerate and scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--force", opt.force, "Allow enumerate and scan beyond m = 4");
  app.add_flag("--decimal", opt.decimal,
               "Render rationals as truncated decimals in text output ('...' marks inexact)");
  app.add_option("--cap", opt.cap, "Largest order for exhaustive subset scans")
      ->capture_default_str();

  auto input = [&](CLI::App* s) {
    s->add_option("input", opt.input, "Matrix file, '-' for standard input")->capture_default_str();
  };
  const std::vector<std::string> sets{"Um", "UM"};
  const std::vector<std::string> modes{"stochastic", "substochastic"};

  auto* check = app.add_subcommand("check", "Membership in Um or UM with certificate");
  input(check);
  check->add_option("--set", opt.set)->check(CLI::IsMember(sets))->capture_default_str();
  check->add_option("--method", opt.method)
      ->check(CLI::IsMember({"auto", "bruteforce", "mincut"}))
      ->capture_default_str();
  check->add_flag("--bounds", opt.bounds, "Also test the quadratic-form bounds");

  auto* decompose = app.add_subcommand("decompose", "Solve (X + X^T)/2 = A");
  input(decompose);
  decompose->add_option("--mode", opt.mode)->check(CLI::IsMember(modes))->capture_default_str();
  decompose->add_option("--method", opt.decomp_method)
      ->check(CLI::IsMember({"flow", "inductive", "vertices"}))
      ->capture_default_str();

  auto* extreme = app.add_subcommand("extreme", "Extremity by the saturated-neighborhood criterion");
  input(extreme);
  extreme->add_option("--ambient", opt.ambient)->check(CLI::IsMember(sets))->capture_default_str();
  extreme->add_flag("--oracle", opt.oracle, "Cross-check with the rank oracle");

  auto* enumerate = app.add_subcommand("enumerate", "List all extreme points for order m");
  enumerate->add_option("--m", opt.order)->required();
  enumerate->add_option("--ambient", opt.ambient)->check(CLI::IsMember(sets))->capture_default_str();

  auto* neighborhoods =
      app.add_subcommand("neighborhoods", "Saturated sets and minimal/maximal neighborhoods");
  input(neighborhoods);
  neighborhoods->add_option("--i", opt.i, "Row index (1-based)");
  neighborhoods->add_option("--j", opt.j, "Column index (1-based)");

  auto* scan = app.add_subcommand("scan", "Test the grid conjectures for order m");
  scan->add_option("--m", opt.order)->required();

  auto* op = app.add_subcommand("operator", "Checks on a quadratic stochastic operator");
  input(op);
  op->add_option("--check", opt.check)
      ->check(CLI::IsMember({"stochastic", "gds-necessary", "gds-sample"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a proposed X against A");
  input(verify);
  verify->add_option("--mode", opt.mode)->check(CLI::IsMember(modes))->capture_default_str();
  verify->add_option("--x", opt.x_file, "File holding X")->required();

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }

  Session session(opt, in, out);
  try {
    if (check->parsed()) return session.check();
    if (decompose->parsed()) return session.decompose();
    if (extreme->parsed()) return session.extreme();
    if (enumerate->parsed()) return session.enumerate();
    if (neighborhoods->parsed()) return session.neighborhoods();
    if (scan->parsed()) return session.scan();
    if (op->parsed()) return session.op();
    return session.verify();
  } catch (const Error& e) {
    if (opt.json) {
      out << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    }
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace gdecomp::cli
