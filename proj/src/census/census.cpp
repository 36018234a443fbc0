// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pcskit/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "pcskit/constructions.hpp"
#include "pcskit/error.hpp"

namespace pcs {

  namespace {

    constexpr Element empty_cell = static_cast<Element>(-1);

    class Enumerator {
     public:
      Enumerator(std::size_t n, bool dedup,
                 std::function<void(Semigroup const&)> const& visit)
          : n_(n), dedup_(dedup), visit_(visit), cell_(n * n, empty_cell) {}

      void run() {
        fill(0);
      }

     private:
      Element at(Element i, Element j) const {
        return cell_[i * n_ + j];
      }

      // (ij)k == i(jk) whenever all four cells involved are known.
      bool triple_ok(Element i, Element j, Element k) const {
        Element ij = at(i, j), jk = at(j, k);
        if (ij == empty_cell || jk == empty_cell) {
          return true;
        }
        Element l = at(ij, k), r = at(i, jk);
        return l == empty_cell || r == empty_cell || l == r;
      }

      // Only triples in which the cell (p, q) takes part can change status.
      bool consistent(Element p, Element q) const {
        for (Element x = 0; x < n_; ++x) {
          if (!triple_ok(p, q, x)) {  // (pq)x
            return false;
          }
          if (!triple_ok(x, p, q)) {  // x(pq)
            return false;
          }
          for (Element y = 0; y < n_; ++y) {
            if (at(x, y) == p && !triple_ok(x, y, q)) {  // (xy)q, xy = p
              return false;
            }
            if (at(x, y) == q && !triple_ok(p, x, y)) {  // p(xy), xy = q
              return false;
            }
          }
        }
        return true;
      }

      void fill(std::size_t pos) {
        if (pos == cell_.size()) {
          Semigroup s = Semigroup::from_trusted_table(n_, cell_);
          if (!dedup_ || canonical_table(s) == cell_) {
            visit_(s);
          }
          return;
        }
        auto p = static_cast<Element>(pos / n_);
        auto q = static_cast<Element>(pos % n_);
        for (Element v = 0; v < n_; ++v) {
          cell_[pos] = v;
          if (consistent(p, q)) {
            fill(pos + 1);
          }
        }
        cell_[pos] = empty_cell;
      }

      std::size_t                                  n_;
      bool                                         dedup_;
      std::function<void(Semigroup const&)> const& visit_;
      std::vector<Element>                         cell_;
    };

    std::vector<Element> relabel(Semigroup const& s,
                                 std::vector<Element> const& perm) {
      std::size_t          n = s.order();
      std::vector<Element> out(n * n);
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          out[perm[i] * n + perm[j]] = perm[s.product(i, j)];
        }
      }
      return out;
    }

    struct Outcome {
      bool                       member = true;
      std::vector<CensusFailure> disagreements;
      std::vector<CensusFailure> failures;
      std::vector<std::pair<Method, std::chrono::nanoseconds>> timing;
    };

    Outcome examine(Semigroup const& s) {
      Outcome out;
      Verdict v = evaluate_methods(s);
      for (auto const& r : v.per_method) {
        out.timing.emplace_back(r.method, r.elapsed);
      }
      out.member = v.member;
      if (!v.unanimous()) {
        std::ostringstream os;
        for (auto const& r : v.per_method) {
          os << (os.tellp() > 0 ? " " : "") << to_string(r.method) << '='
             << (r.member ? "yes" : "no");
        }
        out.disagreements.push_back(
            {"disagreement", s.order(), s.table(), os.str()});
        return out;
      }
      if (!v.member && is_member(s, Variety::CS).member) {
        out.failures.push_back({"cs-not-member", s.order(), s.table(),
                                "completely simple but rejected"});
      }
      if (!v.member && s.is_commutative()) {
        out.failures.push_back({"commutative-not-member", s.order(), s.table(),
                                "commutative but rejected"});
      }
      return out;
    }

  }  // namespace

  void for_each_semigroup(std::size_t order, bool dedup,
                          std::function<void(Semigroup const&)> const& visit) {
    if (order == 0) {
      throw Error(ErrorCode::InvalidArgument, "order must be positive");
    }
    if (order > max_enumeration_order) {
      throw Error(ErrorCode::TooLarge,
                  "enumeration is limited to order "
                      + std::to_string(max_enumeration_order));
    }
    if (dedup && order > max_dedup_order) {
      throw Error(ErrorCode::TooLarge,
                  "dedup is limited to order " + std::to_string(max_dedup_order));
    }
    Enumerator(order, dedup, visit).run();
  }

  std::vector<Semigroup> enumerate_semigroups(std::size_t order, bool dedup) {
    std::vector<Semigroup> out;
    for_each_semigroup(order, dedup,
                       [&](Semigroup const& s) { out.push_back(s); });
    return out;
  }

  std::vector<Element> canonical_table(Semigroup const& s) {
    std::vector<Element> perm(s.order());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::vector<Element> best = s.table();
    do {
      auto t = relabel(s, perm);
      if (t < best) {
        best = std::move(t);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  Semigroup transformation_semigroup(std::size_t                        degree,
                                     std::vector<Transformation> const& gens,
                                     std::size_t                        cap) {
    if (degree == 0 || gens.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "need a positive degree and at least one generator");
    }
    for (auto const& g : gens) {
      if (g.size() != degree
          || std::any_of(g.begin(), g.end(),
                         [&](Element v) { return v >= degree; })) {
        throw Error(ErrorCode::InvalidArgument,
                    "generator is not a self-map of {0.." + std::to_string(degree - 1)
                        + "}");
      }
    }
    auto compose = [&](Transformation const& f, Transformation const& g) {
      Transformation h(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        h[i] = g[f[i]];
      }
      return h;
    };
    std::vector<Transformation>          elements;
    std::map<Transformation, Element>    index_of;
    auto add = [&](Transformation t) {
      if (index_of.try_emplace(t, static_cast<Element>(elements.size())).second) {
        elements.push_back(std::move(t));
        if (elements.size() > cap) {
          throw Error(ErrorCode::TooLarge,
                      "transformation semigroup exceeds "
                          + std::to_string(cap) + " elements");
        }
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t q = 0; q < elements.size(); ++q) {
      for (auto const& g : gens) {
        add(compose(elements[q], g));
      }
    }
    std::size_t          n = elements.size();
    std::vector<Element> table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = index_of.at(compose(elements[i], elements[j]));
      }
      std::string l = "[";
      for (std::size_t k = 0; k < degree; ++k) {
        l += std::to_string(elements[i][k]);
      }
      labels[i] = l + "]";
    }
    return Semigroup::from_trusted_table(n, std::move(table), std::move(labels));
  }

  Semigroup random_transformation_semigroup(std::size_t degree, std::size_t gens,
                                            std::uint64_t seed) {
    if (degree == 0 || degree > 5 || gens == 0 || gens > 4) {
      throw Error(ErrorCode::TooLarge,
                  "random transformation semigroups need 1 <= d <= 5 and "
                  "1 <= g <= 4");
    }
    std::mt19937_64             rng(seed);
    std::vector<Transformation> g(gens, Transformation(degree));
    for (auto& t : g) {
      for (auto& v : t) {
        v = static_cast<Element>(rng() % degree);
      }
    }
    return transformation_semigroup(degree, g);
  }

  std::string ReesSample::name() const {
    std::ostringstream os;
    os << "M(Z" << group_order << "; " << i_size << ", " << lambda_size << "; ";
    for (std::size_t k = 0; k < sandwich.size(); ++k) {
      os << (k ? (k % i_size ? "," : ";") : "") << sandwich[k];
    }
    os << ')';
    return os.str();
  }

  Semigroup ReesSample::build() const {
    return rees_matrix(cyclic_group(group_order), i_size, lambda_size, sandwich);
  }

  std::string Population::describe() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::exhaustive: os << "exhaustive order=" << order; break;
      case Kind::transformation:
        os << "transformation degree=" << degree << " gens=" << gens
           << " count=" << count << " seed=" << seed;
        break;
      case Kind::rees: os << "rees count=" << count << " seed=" << seed; break;
      case Kind::power_of_cs:
        os << "power-of-cs max-order=" << order
           << (with_empty ? " with-empty" : "");
        break;
    }
    return os.str();
  }

  std::vector<Semigroup> generate(Population const& p) {
    std::vector<Semigroup> out;
    switch (p.kind) {
      case Population::Kind::exhaustive:
        return enumerate_semigroups(p.order, false);
      case Population::Kind::transformation:
        for (std::size_t k = 0; k < p.count; ++k) {
          out.push_back(random_transformation_semigroup(p.degree, p.gens,
                                                        p.seed + k));
        }
        return out;
      case Population::Kind::rees: {
        std::mt19937_64 rng(p.seed);
        for (std::size_t k = 0; k < p.count; ++k) {
          ReesSample r;
          r.group_order = 1 + rng() % 4;
          r.i_size      = 1 + rng() % 2;
          r.lambda_size = 1 + rng() % 2;
          r.sandwich.resize(r.i_size * r.lambda_size);
          for (auto& x : r.sandwich) {
            x = static_cast<Element>(rng() % r.group_order);
          }
          out.push_back(r.build());
        }
        return out;
      }
      case Population::Kind::power_of_cs:
        for (std::size_t n = 1; n <= p.order; ++n) {
          for_each_semigroup(n, false, [&](Semigroup const& s) {
            if (is_member(s, Variety::CS).member) {
              out.push_back(power_semigroup(s, p.with_empty).result);
            }
          });
        }
        return out;
    }
    return out;
  }

  CensusReport cross_validate(std::vector<Semigroup> const& population,
                              std::string description, unsigned threads) {
    std::vector<Outcome> outcomes(population.size());
    threads = std::max(1U, threads);
    if (threads == 1 || population.size() < 2) {
      for (std::size_t k = 0; k < population.size(); ++k) {
        outcomes[k] = examine(population[k]);
      }
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t k = w; k < population.size(); k += threads) {
            outcomes[k] = examine(population[k]);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    CensusReport report;
    report.population     = std::move(description);
    report.count_examined = population.size();
    for (auto& o : outcomes) {
      report.count_members += o.member ? 1 : 0;
      for (auto& d : o.disagreements) {
        report.disagreements.push_back(std::move(d));
      }
      for (auto& f : o.failures) {
        report.failures.push_back(std::move(f));
      }
      for (auto const& [m, t] : o.timing) {
        report.timing[std::string(to_string(m))] += t;
      }
    }
    std::sort(report.disagreements.begin(), report.disagreements.end());
    std::sort(report.failures.begin(), report.failures.end());
    return report;
  }

  CensusReport cross_validate(Population const& p, unsigned threads) {
    return cross_validate(generate(p), p.describe(), threads);
  }

}  // namespace pcs
