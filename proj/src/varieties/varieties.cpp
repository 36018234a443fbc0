// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pcskit/varieties.hpp"

#include <algorithm>
#include <cctype>

#include "pcskit/constructions.hpp"
#include "pcskit/error.hpp"
#include "pcskit/terms.hpp"

namespace pcs {

  namespace {

    constexpr std::pair<Variety, std::string_view> variety_names[] = {
        {Variety::T, "T"},   {Variety::RZ, "RZ"}, {Variety::LZ, "LZ"},
        {Variety::RB, "RB"}, {Variety::G, "G"},   {Variety::CS, "CS"},
        {Variety::J, "J"},   {Variety::BG, "BG"}, {Variety::ER, "ER"},
        {Variety::EL, "EL"},
    };

    std::string upper(std::string_view s) {
      std::string out(s);
      for (char& c : out) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      return out;
    }

    Membership fail(std::vector<Element> witness, std::string reason) {
      return {false, std::move(witness), std::move(reason)};
    }

    Membership right_zero_pair(Semigroup const& s) {
      auto es = s.idempotents();
      for (Element e : es) {
        for (Element f : es) {
          if (e != f && s.product(e, f) == f && s.product(f, e) == e) {
            return fail({e, f}, "right zero subsemigroup {e, f}");
          }
        }
      }
      return {};
    }

    Membership left_zero_pair(Semigroup const& s) {
      auto es = s.idempotents();
      for (Element e : es) {
        for (Element f : es) {
          if (e != f && s.product(e, f) == e && s.product(f, e) == f) {
            return fail({e, f}, "left zero subsemigroup {e, f}");
          }
        }
      }
      return {};
    }

    Membership unique_inverses(Semigroup const& s) {
      std::size_t n = s.order();
      for (Element x = 0; x < n; ++x) {
        std::vector<Element> inverses;
        for (Element y = 0; y < n; ++y) {
          if (s.product(s.product(x, y), x) == x
              && s.product(s.product(y, x), y) == y) {
            inverses.push_back(y);
          }
        }
        if (inverses.size() > 1) {
          return fail({x, inverses[0], inverses[1]},
                      "regular element with more than one inverse");
        }
      }
      return {};
    }

    Membership by_identity(Semigroup const& s, std::string_view name) {
      CheckResult r = check(s, builtin(name));
      if (r.satisfied) {
        return {};
      }
      std::vector<Element> w;
      for (auto const& [var, value] : r.counterexample->assignment) {
        w.push_back(value);
      }
      return fail(std::move(w), "pseudoidentity '" + std::string(name)
                                    + "' fails at this assignment");
    }

    Membership structural(Semigroup const& s, Variety v) {
      std::size_t n = s.order();
      switch (v) {
        case Variety::T:
          return n == 1 ? Membership{} : fail({0, 1}, "more than one element");
        case Variety::RZ:
          for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
              if (s.product(x, y) != y) {
                return fail({x, y}, "xy != y");
              }
            }
          }
          return {};
        case Variety::LZ:
          for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
              if (s.product(x, y) != x) {
                return fail({x, y}, "xy != x");
              }
            }
          }
          return {};
        case Variety::RB:
          for (Element x = 0; x < n; ++x) {
            if (!s.is_idempotent(x)) {
              return fail({x}, "x^2 != x");
            }
          }
          for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
              if (s.product(s.product(x, y), x) != x) {
                return fail({x, y}, "xyx != x");
              }
            }
          }
          return {};
        case Variety::G:
          for (Element a = 0; a < n; ++a) {
            std::vector<bool> row(n, false), col(n, false);
            for (Element x = 0; x < n; ++x) {
              row[s.product(a, x)] = true;
              col[s.product(x, a)] = true;
            }
            if (std::count(row.begin(), row.end(), true)
                    != static_cast<long>(n)
                || std::count(col.begin(), col.end(), true)
                       != static_cast<long>(n)) {
              return fail({a}, "aS != S or Sa != S");
            }
          }
          return {};
        case Variety::CS: {
          GreenData g = green_classes(s);
          if (g.j.count() == 1) {
            return {};
          }
          return fail({g.j.reps[0], g.j.reps[1]}, "more than one J-class");
        }
        case Variety::J: {
          GreenData g = green_classes(s);
          for (Element x = 0; x < n; ++x) {
            Element rep = g.j.reps[g.j.class_of[x]];
            if (rep != x) {
              return fail({rep, x}, "distinct J-related elements");
            }
          }
          return {};
        }
        case Variety::ER: return right_zero_pair(s);
        case Variety::EL: return left_zero_pair(s);
        case Variety::BG: {
          Membership m = right_zero_pair(s);
          return m.member ? left_zero_pair(s) : m;
        }
      }
      return {};
    }

    std::vector<Element> to_parent(SubSemigroup const&         sub,
                                   std::vector<Element> const& local) {
      std::vector<Element> out;
      for (Element x : local) {
        out.push_back(sub.to_parent[x]);
      }
      return out;
    }

  }  // namespace

  std::string_view to_string(Variety v) noexcept {
    for (auto const& [var, name] : variety_names) {
      if (var == v) {
        return name;
      }
    }
    return "?";
  }

  Variety parse_variety(std::string_view name) {
    std::string u = upper(name);
    for (auto const& [var, n] : variety_names) {
      if (n == u) {
        return var;
      }
    }
    throw Error(ErrorCode::UnknownVariety,
                "unknown variety '" + std::string(name) + "'");
  }

  std::string_view to_string(Engine e) noexcept {
    switch (e) {
      case Engine::structural: return "structural";
      case Engine::identity: return "identity";
      case Engine::unique_inverse: return "unique-inverse";
    }
    return "?";
  }

  Engine parse_engine(std::string_view name) {
    for (Engine e :
         {Engine::structural, Engine::identity, Engine::unique_inverse}) {
      if (to_string(e) == name) {
        return e;
      }
    }
    throw Error(ErrorCode::UnknownName,
                "unknown engine '" + std::string(name) + "'");
  }

  bool has_engine(Variety v, Engine e) noexcept {
    switch (e) {
      case Engine::structural: return true;
      case Engine::identity:
        return v == Variety::BG || v == Variety::ER || v == Variety::EL;
      case Engine::unique_inverse: return v == Variety::BG;
    }
    return false;
  }

  Membership is_member(Semigroup const& s, Variety v, Engine engine) {
    if (!has_engine(v, engine)) {
      throw Error(ErrorCode::InvalidArgument,
                  "variety " + std::string(to_string(v)) + " has no "
                      + std::string(to_string(engine)) + " engine");
    }
    switch (engine) {
      case Engine::structural: return structural(s, v);
      case Engine::identity:
        return by_identity(s, v == Variety::BG   ? "bg"
                              : v == Variety::ER ? "er"
                                                 : "el");
      case Engine::unique_inverse: return unique_inverses(s);
    }
    return {};
  }

  ElementMask sandwich_set(Semigroup const& s, Element a, Element b) {
    ElementMask m(s.order(), false);
    for (Element x = 0; x < s.order(); ++x) {
      m[s.product(s.product(a, x), b)] = true;
    }
    return m;
  }

  ElementMask malcev_rb_preimage(Semigroup const& s, Element a, Element b) {
    ElementMask m = sandwich_set(s, a, b);
    if (a == b) {
      m[a]                = true;
      m[s.product(a, a)]  = true;
    } else {
      m[s.product(a, b)] = true;
    }
    return m;
  }

  IdealMembership malcev_with_band(Variety v, Semigroup const& s,
                                   BandVariety kind) {
    std::size_t n = s.order();
    auto        test = [&](ElementMask const& mask,
                    std::vector<Element> anchors) -> std::optional<IdealMembership> {
      SubSemigroup sub = restrict_to(s, mask);
      Membership   m   = is_member(sub.local, v);
      if (m.member) {
        return std::nullopt;
      }
      m.witness = to_parent(sub, m.witness);
      return IdealMembership{false, std::move(anchors), std::move(m)};
    };
    if (kind == BandVariety::RB) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (auto r = test(malcev_rb_preimage(s, a, b), {a, b})) {
            return *r;
          }
        }
      }
      return {};
    }
    for (Element a = 0; a < n; ++a) {
      ElementMask mask = kind == BandVariety::RZ ? left_ideal_mask(s, a)
                                                 : right_ideal_mask(s, a);
      if (auto r = test(mask, {a})) {
        return *r;
      }
    }
    return {};
  }

  IdealMembership star_rz_membership(Variety v, Semigroup const& s) {
    for (Element a = 0; a < s.order(); ++a) {
      RegularRepresentation rep = regular_representation_image(s, a, Side::right);
      Membership            m   = is_member(rep.image, v);
      if (m.member) {
        continue;
      }
      // Report each failing translation by the first ideal element inducing it.
      std::vector<Element> w;
      for (Element k : m.witness) {
        auto it = std::find(rep.projection.begin(), rep.projection.end(), k);
        w.push_back(rep.ideal.to_parent[it - rep.projection.begin()]);
      }
      m.witness = std::move(w);
      return IdealMembership{false, {a}, std::move(m)};
    }
    return {};
  }

}  // namespace pcs
