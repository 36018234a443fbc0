// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pcskit/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pcskit/error.hpp"
#include "pcskit/varieties.hpp"

namespace pcs {

  namespace {

    constexpr std::size_t hard_power_limit = 16;

    std::string subset_label(Semigroup const& base, std::uint64_t mask) {
      std::string out = "{";
      bool        first = true;
      for (Element x = 0; x < base.order(); ++x) {
        if (mask >> x & 1U) {
          if (!first) {
            out += ",";
          }
          out += base.label(x);
          first = false;
        }
      }
      return out + "}";
    }

  }  // namespace

  std::uint64_t subset_product(Semigroup const& base, std::uint64_t x,
                               std::uint64_t y) {
    std::uint64_t out = 0;
    for (Element a = 0; a < base.order(); ++a) {
      if (!(x >> a & 1U)) {
        continue;
      }
      for (Element b = 0; b < base.order(); ++b) {
        if (y >> b & 1U) {
          out |= std::uint64_t{1} << base.product(a, b);
        }
      }
    }
    return out;
  }

  PowerSemigroup power_semigroup(Semigroup const& base, bool with_empty,
                                 std::size_t cap) {
    std::size_t n = base.order();
    if (n > cap || n > hard_power_limit) {
      std::ostringstream os;
      os << "power semigroup of an order-" << n << " semigroup exceeds cap "
         << std::min(cap, hard_power_limit);
      throw Error(ErrorCode::TooLarge, os.str());
    }
    std::size_t full = std::size_t{1} << n;
    // left[a][Y] = {a} * Y, built by peeling the lowest bit of Y.
    std::vector<std::uint64_t> left(n * full, 0);
    for (Element a = 0; a < n; ++a) {
      for (std::size_t y = 1; y < full; ++y) {
        std::size_t low  = y & (~y + 1);
        Element     b    = static_cast<Element>(__builtin_ctzll(low));
        left[a * full + y] = left[a * full + (y ^ low)]
                             | std::uint64_t{1} << base.product(a, b);
      }
    }
    PowerSemigroup p;
    p.with_empty = with_empty;
    for (std::uint64_t m = with_empty ? 0 : 1; m < full; ++m) {
      p.subset_of.push_back(m);
    }
    std::size_t          order = p.subset_of.size();
    std::vector<Element> table(order * order);
    std::vector<std::string> labels;
    labels.reserve(order);
    for (std::size_t i = 0; i < order; ++i) {
      std::uint64_t x = p.subset_of[i];
      labels.push_back(subset_label(base, x));
      for (std::size_t j = 0; j < order; ++j) {
        std::uint64_t y   = p.subset_of[j];
        std::uint64_t out = 0;
        for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
          out |= left[__builtin_ctzll(rest) * full + y];
        }
        table[i * order + j] = p.element_of(out);
      }
    }
    p.result = Semigroup::from_trusted_table(order, std::move(table),
                                             std::move(labels));
    return p;
  }

  Semigroup free_constant_band(BandKind kind, std::size_t rows,
                               std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorCode::InvalidArgument, "band sizes must be >= 1");
    }
    std::vector<Element> table;
    std::size_t          n = 0;
    switch (kind) {
      case BandKind::right_zero:
      case BandKind::left_zero:
        n = rows;
        table.resize(n * n);
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            table[x * n + y] = kind == BandKind::right_zero ? y : x;
          }
        }
        break;
      case BandKind::rectangular:
        n = rows * cols;
        table.resize(n * n);
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            table[x * n + y] = static_cast<Element>((x / cols) * cols + y % cols);
          }
        }
        break;
    }
    return Semigroup::from_trusted_table(n, std::move(table));
  }

  Semigroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
    }
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<Element>((x + y) % n);
      }
    }
    return Semigroup::from_trusted_table(n, std::move(table));
  }

  Semigroup rees_matrix(Semigroup const& group, std::size_t i_size,
                        std::size_t                 lambda_size,
                        std::vector<Element> const& sandwich) {
    if (!is_member(group, Variety::G).member) {
      throw Error(ErrorCode::NotAGroup, "Rees matrix base is not a group");
    }
    if (i_size == 0 || lambda_size == 0
        || sandwich.size() != i_size * lambda_size) {
      throw Error(ErrorCode::InvalidMatrix,
                  "sandwich matrix must have lambda x I entries");
    }
    for (Element g : sandwich) {
      if (g >= group.order()) {
        throw Error(ErrorCode::InvalidMatrix,
                    "sandwich entry outside the group");
      }
    }
    std::size_t g_size = group.order();
    std::size_t n      = i_size * g_size * lambda_size;
    auto index = [&](std::size_t i, std::size_t g, std::size_t l) {
      return static_cast<Element>((i * g_size + g) * lambda_size + l);
    };
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t i = x / (g_size * lambda_size);
      std::size_t g = x / lambda_size % g_size;
      std::size_t l = x % lambda_size;
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t j  = y / (g_size * lambda_size);
        std::size_t h  = y / lambda_size % g_size;
        std::size_t mu = y % lambda_size;
        Element     p  = sandwich[l * i_size + j];
        Element     gp = group.product(group.product(static_cast<Element>(g), p),
                                   static_cast<Element>(h));
        table[x * n + y] = index(i, gp, mu);
      }
    }
    Semigroup result = Semigroup::from_table(n, std::move(table));
    if (!is_member(result, Variety::CS).member) {
      throw Error(ErrorCode::InvalidMatrix,
                  "Rees matrix construction is not completely simple");
    }
    return result;
  }

  RegularRepresentation regular_representation_image(Semigroup const& s,
                                                     Element a, Side side) {
    RegularRepresentation rep;
    rep.anchor = a;
    rep.side   = side;
    rep.ideal  = principal_ideal(s, a, side == Side::right ? Side::left
                                                           : Side::right);
    Semigroup const& ideal = rep.ideal.local;
    std::size_t      m     = ideal.order();
    std::map<std::vector<Element>, Element> index_of;
    rep.projection.resize(m);
    for (Element t = 0; t < m; ++t) {
      std::vector<Element> values(m);
      for (Element x = 0; x < m; ++x) {
        values[x] = side == Side::right ? ideal.product(x, t)
                                        : ideal.product(t, x);
      }
      auto [it, inserted] = index_of.try_emplace(
          values, static_cast<Element>(rep.maps.size()));
      if (inserted) {
        rep.maps.push_back(values);
      }
      rep.projection[t] = it->second;
    }
    // Right translations act on the right, so rho_s rho_t is "s first, then
    // t"; left translations compose the usual way.
    std::size_t          k = rep.maps.size();
    std::vector<Element> table(k * k);
    for (Element p = 0; p < k; ++p) {
      for (Element q = 0; q < k; ++q) {
        std::vector<Element> values(m);
        for (Element x = 0; x < m; ++x) {
          values[x] = side == Side::right ? rep.maps[q][rep.maps[p][x]]
                                          : rep.maps[p][rep.maps[q][x]];
        }
        auto it = index_of.find(values);
        if (it == index_of.end()) {
          throw Error(ErrorCode::InvalidArgument,
                      "translations are not closed under composition");
        }
        table[p * k + q] = it->second;
      }
    }
    rep.image = Semigroup::from_trusted_table(k, std::move(table));
    return rep;
  }

  Semigroup direct_product(Semigroup const& s, Semigroup const& t,
                           std::size_t cap) {
    std::size_t ns = s.order(), nt = t.order();
    if (ns * nt > cap) {
      throw Error(ErrorCode::TooLarge, "direct product exceeds cap");
    }
    std::size_t          n = ns * nt;
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element a = s.product(x / nt, y / nt);
        Element b = t.product(x % nt, y % nt);
        table[x * n + y] = static_cast<Element>(a * nt + b);
      }
    }
    std::vector<std::string> labels;
    if (s.has_labels() || t.has_labels()) {
      for (Element x = 0; x < n; ++x) {
        labels.push_back("(" + s.label(x / nt) + "," + t.label(x % nt) + ")");
      }
    }
    return Semigroup::from_trusted_table(n, std::move(table), std::move(labels));
  }

  WreathElement wreath_product_rule(Semigroup const& w, WreathElement const& x,
                                    WreathElement const& y) {
    WreathElement out;
    out.t = y.t;
    out.f.resize(x.f.size());
    Element fiber = y.f[x.t];
    for (std::size_t c = 0; c < x.f.size(); ++c) {
      out.f[c] = w.product(x.f[c], fiber);
    }
    return out;
  }

  Semigroup wreath_right_zero(Semigroup const& w, std::size_t m,
                              bool extra_coordinate, std::size_t cap) {
    if (m == 0) {
      throw Error(ErrorCode::InvalidArgument, "wreath base must be non-empty");
    }
    std::size_t coords = m + (extra_coordinate ? 1 : 0);
    std::size_t functions = 1;
    for (std::size_t c = 0; c < coords; ++c) {
      functions *= w.order();
      if (functions * m > cap) {
        throw Error(ErrorCode::TooLarge, "wreath product exceeds cap");
      }
    }
    std::size_t n = functions * m;
    auto decode = [&](std::size_t x) {
      WreathElement e;
      e.t = static_cast<Element>(x % m);
      e.f.assign(coords, 0);
      std::size_t code = x / m;
      for (std::size_t c = coords; c-- > 0;) {
        e.f[c] = static_cast<Element>(code % w.order());
        code /= w.order();
      }
      return e;
    };
    auto encode = [&](WreathElement const& e) {
      std::size_t code = 0;
      for (Element v : e.f) {
        code = code * w.order() + v;
      }
      return static_cast<Element>(code * m + e.t);
    };
    std::vector<WreathElement> elems;
    elems.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
      elems.push_back(decode(x));
    }
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x * n + y] = encode(wreath_product_rule(w, elems[x], elems[y]));
      }
    }
    return Semigroup::from_table(n, std::move(table));
  }

}  // namespace pcs
