// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <future>
#include <sstream>

#include "pcskit/constructions.hpp"
#include "pcskit/error.hpp"
#include "pcskit/pcs.hpp"

namespace pcs {

  namespace {

    constexpr std::pair<Method, std::string_view> method_names[] = {
        {Method::asb, "asb"},
        {Method::ideals, "ideals"},
        {Method::regrep, "regrep"},
        {Method::basis_i, "basis:i"},
        {Method::basis_i_prime, "basis:i-prime"},
        {Method::basis_ii, "basis:ii"},
        {Method::basis_iii, "basis:iii"},
    };

    std::vector<Element> lift(SubSemigroup const&         sub,
                              std::vector<Element> const& local) {
      std::vector<Element> out;
      for (Element x : local) {
        out.push_back(sub.to_parent[x]);
      }
      return out;
    }

    std::optional<MethodWitness> run_asb(Semigroup const& s) {
      for (Element a = 0; a < s.order(); ++a) {
        for (Element b = 0; b < s.order(); ++b) {
          SubSemigroup sub = restrict_to(s, sandwich_set(s, a, b));
          Membership   m   = is_member(sub.local, Variety::BG);
          if (!m.member) {
            MethodWitness w;
            w.anchors = {a, b};
            w.inner   = lift(sub, m.witness);
            return w;
          }
        }
      }
      return std::nullopt;
    }

    std::optional<MethodWitness> one_sided_ideal(Semigroup const& s,
                                                 Element a, Side side) {
      SubSemigroup sub = principal_ideal(s, a, side);
      Membership   m   = is_member(sub.local,
                                   side == Side::left ? Variety::ER : Variety::EL);
      if (m.member) {
        return std::nullopt;
      }
      MethodWitness w;
      w.anchors = {a};
      w.side    = side;
      w.inner   = lift(sub, m.witness);
      return w;
    }

    std::optional<MethodWitness> run_ideals(Semigroup const& s) {
      for (Side side : {Side::left, Side::right}) {
        for (Element a = 0; a < s.order(); ++a) {
          if (auto w = one_sided_ideal(s, a, side)) {
            return w;
          }
        }
      }
      return std::nullopt;
    }

    std::optional<MethodWitness> run_regrep(Semigroup const& s) {
      IdealMembership r = star_rz_membership(Variety::BG, s);
      if (r.member) {
        return std::nullopt;
      }
      MethodWitness w;
      w.anchors = r.anchors;
      w.inner   = r.inner.witness;
      return w;
    }

    std::optional<MethodWitness> run_basis(Semigroup const& s, Method m) {
      for (auto const& id : basis_identities(m)) {
        CheckResult r = check(s, id);
        if (!r.satisfied) {
          MethodWitness w;
          w.identity       = id.name;
          w.counterexample = r.counterexample;
          return w;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::string_view to_string(Method m) noexcept {
    for (auto const& [method, name] : method_names) {
      if (method == m) {
        return name;
      }
    }
    return "?";
  }

  Method parse_method(std::string_view name) {
    for (auto const& [method, n] : method_names) {
      if (n == name) {
        return method;
      }
    }
    throw Error(ErrorCode::UnknownName,
                "unknown method '" + std::string(name) + "'");
  }

  std::vector<Method> all_methods() {
    std::vector<Method> out;
    for (auto const& [method, name] : method_names) {
      out.push_back(method);
    }
    return out;
  }

  std::vector<Pseudoidentity> basis_identities(Method m) {
    switch (m) {
      case Method::basis_i: return {builtin("pcs-i")};
      case Method::basis_i_prime: return {builtin("pcs-i-prime")};
      case Method::basis_ii: return {builtin("pcs-ii-1"), builtin("pcs-ii-2")};
      case Method::basis_iii: return {builtin("pcs-iii")};
      default: return {};
    }
  }

  bool Verdict::unanimous() const noexcept {
    for (auto const& r : per_method) {
      if (r.member != per_method.front().member) {
        return false;
      }
    }
    return true;
  }

  MethodResult run_method(Semigroup const& s, Method m) {
    auto         start = std::chrono::steady_clock::now();
    MethodResult r;
    r.method = m;
    switch (m) {
      case Method::asb: r.witness = run_asb(s); break;
      case Method::ideals: r.witness = run_ideals(s); break;
      case Method::regrep: r.witness = run_regrep(s); break;
      default: r.witness = run_basis(s, m); break;
    }
    r.member  = !r.witness.has_value();
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return r;
  }

  Verdict evaluate_methods(Semigroup const& s, std::vector<Method> methods,
                           unsigned threads) {
    if (methods.empty()) {
      methods = all_methods();
    }
    Verdict v;
    if (threads > 1) {
      std::vector<std::future<MethodResult>> jobs;
      for (Method m : methods) {
        jobs.push_back(std::async(std::launch::async,
                                  [&s, m] { return run_method(s, m); }));
      }
      for (auto& j : jobs) {
        v.per_method.push_back(j.get());
      }
    } else {
      for (Method m : methods) {
        v.per_method.push_back(run_method(s, m));
      }
    }
    v.member = v.per_method.front().member;
    return v;
  }

  Verdict decide(Semigroup const& s, std::vector<Method> methods,
                 unsigned threads) {
    Verdict v = evaluate_methods(s, std::move(methods), threads);
    if (!v.unanimous()) {
      std::ostringstream os;
      os << "methods disagree:";
      for (auto const& r : v.per_method) {
        os << ' ' << to_string(r.method) << '=' << (r.member ? "yes" : "no");
      }
      throw Error(ErrorCode::MethodDisagreement, os.str());
    }
    return v;
  }

  bool replay_witness(Semigroup const& s, Method m, MethodWitness const& w) {
    auto in_range = [&](Element x) { return x < s.order(); };
    switch (m) {
      case Method::asb: {
        if (w.anchors.size() != 2 || !in_range(w.anchors[0])
            || !in_range(w.anchors[1])) {
          return false;
        }
        SubSemigroup sub
            = restrict_to(s, sandwich_set(s, w.anchors[0], w.anchors[1]));
        return !is_member(sub.local, Variety::BG).member;
      }
      case Method::ideals:
        if (w.anchors.size() != 1 || !w.side || !in_range(w.anchors[0])) {
          return false;
        }
        return one_sided_ideal(s, w.anchors[0], *w.side).has_value();
      case Method::regrep: {
        if (w.anchors.size() != 1 || !in_range(w.anchors[0])) {
          return false;
        }
        auto rep = regular_representation_image(s, w.anchors[0], Side::right);
        return !is_member(rep.image, Variety::BG).member;
      }
      default: {
        if (!w.counterexample) {
          return false;
        }
        Pseudoidentity id = builtin(w.identity);
        Assignment     alpha = empty_assignment();
        for (auto const& [var, value] : w.counterexample->assignment) {
          if (!in_range(value)) {
            return false;
          }
          alpha[var - 'a'] = value;
        }
        return evaluate(s, id.lhs, alpha) != evaluate(s, id.rhs, alpha);
      }
    }
  }

  bool check_pg_equals_bg(Semigroup const& g, std::size_t cap) {
    if (!is_member(g, Variety::G).member) {
      throw Error(ErrorCode::NotAGroup, "input is not a group");
    }
    PowerSemigroup p = power_semigroup(g, false, cap);
    return is_member(p.result, Variety::BG).member;
  }

}  // namespace pcs
