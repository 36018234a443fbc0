// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "pcskit/error.hpp"
#include "pcskit/pcs.hpp"

namespace pcs {

  namespace {

    std::vector<Element> ideal_members(Semigroup const& s, Element a) {
      ElementMask          m = left_ideal_mask(s, a);
      std::vector<Element> out;
      for (Element x = 0; x < s.order(); ++x) {
        if (m[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    // sigma_s : L~(a) -> L(b), x -> xs. For the object 1, L~(1) = {1} and
    // 1 s = s.
    ConsolidationDescriptor translation(Semigroup const&                         s,
                                        std::vector<std::vector<Element>> const& ideals,
                                        Element a, Element b, Element by) {
      ConsolidationDescriptor d;
      d.source = a;
      d.target = b;
      if (a == s.order()) {
        d.values = {by};
      } else {
        for (Element x : ideals[a]) {
          d.values.push_back(s.product(x, by));
        }
      }
      return d;
    }

  }  // namespace

  Consolidation consolidate(Semigroup const& s, std::size_t cap) {
    std::size_t n = s.order();
    if (n > cap) {
      throw Error(ErrorCode::TooLarge,
                  "order " + std::to_string(n) + " exceeds consolidation cap "
                      + std::to_string(cap));
    }
    std::vector<std::vector<Element>> ideals(n);
    // position[b][x]: index of x within L(b), for composing value lists.
    std::vector<std::vector<std::size_t>> position(n,
                                                   std::vector<std::size_t>(n, 0));
    for (Element b = 0; b < n; ++b) {
      ideals[b] = ideal_members(s, b);
      for (std::size_t k = 0; k < ideals[b].size(); ++k) {
        position[b][ideals[b][k]] = k;
      }
    }

    Consolidation c;
    c.source_order = n;
    std::map<ConsolidationDescriptor, Element> index_of;
    for (Element a = 0; a <= n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element t : ideals[b]) {
          auto d = translation(s, ideals, a, b, t);
          auto [it, inserted] = index_of.try_emplace(
              d, static_cast<Element>(c.descriptors.size() + 1));
          if (inserted) {
            c.descriptors.push_back(std::move(d));
          }
        }
      }
    }

    std::size_t          order = c.descriptors.size() + 1;
    std::vector<Element> table(order * order, 0);
    std::vector<std::string> labels(order);
    labels[0] = "0";
    auto object = [&](Element a) {
      return a == n ? std::string("1") : s.label(a);
    };
    for (std::size_t i = 1; i < order; ++i) {
      auto const& d = c.descriptors[i - 1];
      std::string v;
      for (Element x : d.values) {
        v += (v.empty() ? "" : ",") + s.label(x);
      }
      labels[i] = "(" + object(d.source) + ",[" + v + "]," + object(d.target) + ")";
      for (std::size_t j = 1; j < order; ++j) {
        auto const& e = c.descriptors[j - 1];
        if (d.target != e.source) {
          continue;
        }
        // (a, sigma, b)(b, tau, c) = (a, sigma tau, c); maps act on the right.
        ConsolidationDescriptor composite;
        composite.source = d.source;
        composite.target = e.target;
        for (Element x : d.values) {
          composite.values.push_back(e.values[position[d.target][x]]);
        }
        auto it = index_of.find(composite);
        if (it == index_of.end()) {
          throw Error(ErrorCode::InvalidArgument,
                      "consolidation is not closed under composition");
        }
        table[i * order + j] = it->second;
      }
    }
    c.result = Semigroup::from_table(order, std::move(table), std::move(labels));
    return c;
  }

  DivisionReport division_witness(Semigroup const& s, std::size_t cap,
                                  std::size_t element_cap) {
    if (!decide(s).member) {
      throw Error(ErrorCode::NotInPCS, "input is not a member of PCS");
    }
    Consolidation    c = consolidate(s, cap);
    Semigroup const& w = c.result;
    std::size_t      n = s.order();

    std::map<ConsolidationDescriptor, Element> index_of;
    for (std::size_t k = 0; k < c.descriptors.size(); ++k) {
      index_of.emplace(c.descriptors[k], static_cast<Element>(k + 1));
    }
    std::vector<std::vector<Element>> ideals(n);
    for (Element b = 0; b < n; ++b) {
      ideals[b] = ideal_members(s, b);
    }

    // g_s = (f_s, s) with f_s(a) = (a, x -> xs, s) on coordinates S u {1}.
    DivisionReport              report;
    report.consolidation_order = w.order();
    std::map<WreathElement, Element> seen;
    std::vector<WreathElement>       gens;
    for (Element t = 0; t < n; ++t) {
      WreathElement g;
      g.t = t;
      for (Element a = 0; a <= n; ++a) {
        g.f.push_back(index_of.at(translation(s, ideals, a, t, t)));
      }
      if (seen.try_emplace(g, static_cast<Element>(report.elements.size())).second) {
        report.elements.push_back(g);
      }
      gens.push_back(std::move(g));
    }
    for (std::size_t q = 0; q < report.elements.size(); ++q) {
      for (auto const& g : gens) {
        WreathElement y = wreath_product_rule(w, report.elements[q], g);
        if (seen.try_emplace(y, static_cast<Element>(report.elements.size())).second) {
          report.elements.push_back(std::move(y));
          if (report.elements.size() > element_cap) {
            throw Error(ErrorCode::TooLarge,
                        "generated wreath subsemigroup exceeds "
                            + std::to_string(element_cap) + " elements");
          }
        }
      }
    }

    std::size_t          m = report.elements.size();
    std::vector<Element> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = seen.at(
            wreath_product_rule(w, report.elements[i], report.elements[j]));
      }
    }
    report.u = m <= 256 ? Semigroup::from_table(m, std::move(table))
                        : Semigroup::from_trusted_table(m, std::move(table));

    // The cover reads the value at 1 of the descriptor in coordinate 1.
    report.cover.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Element d = report.elements[i].f[n];
      if (d == 0 || c.descriptors[d - 1].source != c.one()) {
        throw Error(ErrorCode::CoverNotFunctional,
                    "coordinate 1 does not hold a morphism out of 1");
      }
      report.cover[i] = c.descriptors[d - 1].values.front();
    }
    report.homomorphism = is_homomorphism(report.u, s, report.cover);
    std::vector<bool> hit(n, false);
    for (Element v : report.cover) {
      hit[v] = true;
    }
    report.surjective = std::find(hit.begin(), hit.end(), false) == hit.end();
    return report;
  }

}  // namespace pcs
