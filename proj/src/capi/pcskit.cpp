// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pcskit/pcskit.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pcskit/census.hpp"
#include "pcskit/constructions.hpp"
#include "pcskit/error.hpp"
#include "pcskit/io.hpp"
#include "pcskit/pcs.hpp"

struct pcs_semigroup {
  pcs::Semigroup value;
};

namespace {

  using nlohmann::json;
  using pcs::Element;
  using pcs::ErrorCode;

  thread_local std::string last_error;

  pcs_status status_of(ErrorCode code) {
    switch (code) {
      case ErrorCode::InvalidArgument: return PCS_INVALID_ARGUMENT;
      case ErrorCode::IndexOutOfRange: return PCS_INDEX_OUT_OF_RANGE;
      case ErrorCode::NotAssociative: return PCS_NOT_ASSOCIATIVE;
      case ErrorCode::SyntaxError: return PCS_SYNTAX_ERROR;
      case ErrorCode::EmptyTerm: return PCS_EMPTY_TERM;
      case ErrorCode::UnboundVariable: return PCS_UNBOUND_VARIABLE;
      case ErrorCode::UnknownName: return PCS_UNKNOWN_NAME;
      case ErrorCode::UnknownVariety: return PCS_UNKNOWN_VARIETY;
      case ErrorCode::TooLarge: return PCS_TOO_LARGE;
      case ErrorCode::NotAGroup: return PCS_NOT_A_GROUP;
      case ErrorCode::InvalidMatrix: return PCS_INVALID_MATRIX;
      case ErrorCode::NotCompletelySimple: return PCS_NOT_COMPLETELY_SIMPLE;
      case ErrorCode::NotInPCS: return PCS_NOT_IN_PCS;
      case ErrorCode::FreshVariableExhausted: return PCS_FRESH_VARIABLE_EXHAUSTED;
      case ErrorCode::MethodDisagreement: return PCS_METHOD_DISAGREEMENT;
      case ErrorCode::CoverNotFunctional: return PCS_COVER_NOT_FUNCTIONAL;
    }
    return PCS_INTERNAL;
  }

  template <typename F>
  pcs_status guarded(F&& body) noexcept {
    try {
      body();
      last_error.clear();
      return PCS_OK;
    } catch (pcs::Error const& e) {
      last_error = e.what();
      return status_of(e.code());
    } catch (json::exception const& e) {
      last_error = std::string("malformed JSON: ") + e.what();
      return PCS_INVALID_ARGUMENT;
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
      return PCS_INTERNAL;
    } catch (std::exception const& e) {
      last_error = e.what();
      return PCS_INTERNAL;
    }
  }

  void require(void const* p, char const* what) {
    if (p == nullptr) {
      throw pcs::Error(ErrorCode::InvalidArgument,
                       std::string(what) + " must not be NULL");
    }
  }

  char* copy_out(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void emit(json const& j, char** out) {
    require(out, "out");
    *out = copy_out(j.dump());
  }

  void hand_over(pcs::Semigroup s, pcs_semigroup** out) {
    require(out, "out");
    *out = new pcs_semigroup{std::move(s)};
  }

  std::size_t or_default(std::size_t cap, std::size_t fallback) {
    return cap == 0 ? fallback : cap;
  }

  json table_json(pcs::Semigroup const& s) {
    json rows = json::array();
    for (Element i = 0; i < s.order(); ++i) {
      rows.push_back(std::vector<Element>(s.row(i).begin(), s.row(i).end()));
    }
    return rows;
  }

  json counterexample_json(pcs::Counterexample const& c) {
    json a = json::object();
    for (auto const& [var, value] : c.assignment) {
      a[std::string(1, var)] = value;
    }
    return {{"assignment", a}, {"lhs", c.lhs_value}, {"rhs", c.rhs_value}};
  }

  pcs::Counterexample counterexample_from(json const& j) {
    pcs::Counterexample c;
    for (auto const& [var, value] : j.at("assignment").items()) {
      if (var.size() != 1 || var[0] < 'a' || var[0] > 'z') {
        throw pcs::Error(ErrorCode::InvalidArgument,
                         "bad variable name '" + var + "' in witness");
      }
      c.assignment.emplace_back(var[0], value.get<Element>());
    }
    c.lhs_value = j.value("lhs", Element{0});
    c.rhs_value = j.value("rhs", Element{0});
    return c;
  }

  json witness_json(pcs::Semigroup const& s, pcs::MethodWitness const& w) {
    json j = json::object();
    if (!w.anchors.empty()) {
      j["anchors"] = w.anchors;
      if (s.has_labels()) {
        json labels = json::array();
        for (Element a : w.anchors) {
          labels.push_back(s.label(a));
        }
        j["anchor_labels"] = labels;
      }
    }
    if (w.side) {
      j["side"] = *w.side == pcs::Side::left ? "left" : "right";
    }
    if (!w.inner.empty()) {
      j["inner"] = w.inner;
    }
    if (!w.identity.empty()) {
      j["identity"] = w.identity;
    }
    if (w.counterexample) {
      j["counterexample"] = counterexample_json(*w.counterexample);
    }
    return j;
  }

  pcs::Side parse_side(std::string_view side) {
    if (side == "left") {
      return pcs::Side::left;
    }
    if (side == "right") {
      return pcs::Side::right;
    }
    throw pcs::Error(ErrorCode::InvalidArgument,
                     "side must be 'left' or 'right', got '" + std::string(side)
                         + "'");
  }

  pcs::MethodWitness witness_from(json const& j) {
    pcs::MethodWitness w;
    w.anchors = j.value("anchors", std::vector<Element>{});
    if (j.contains("side")) {
      w.side = parse_side(j.at("side").get<std::string>());
    }
    w.inner    = j.value("inner", std::vector<Element>{});
    w.identity = j.value("identity", std::string{});
    if (j.contains("counterexample")) {
      w.counterexample = counterexample_from(j.at("counterexample"));
    }
    return w;
  }

  json partition_json(pcs::Partition const& p) {
    json out = json::array();
    for (std::size_t id = 0; id < p.count(); ++id) {
      out.push_back(p.members(id));
    }
    return out;
  }

  std::vector<Element> parse_matrix(std::string_view text, std::size_t& rows,
                                    std::size_t& cols) {
    std::vector<Element> out;
    rows = 0;
    cols = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view row = text.substr(start, end - start);
      std::size_t      count = 0;
      std::size_t      p     = 0;
      while (p <= row.size()) {
        std::size_t q = row.find(',', p);
        if (q == std::string_view::npos) {
          q = row.size();
        }
        std::string cell(row.substr(p, q - p));
        std::size_t used = 0;
        long        v    = -1;
        try {
          v = std::stol(cell, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        auto trailing = cell.find_first_not_of(" \t", used);
        if (used == 0 || v < 0 || trailing != std::string::npos) {
          throw pcs::Error(ErrorCode::InvalidMatrix,
                           "bad matrix entry '" + cell + "'");
        }
        out.push_back(static_cast<Element>(v));
        ++count;
        p = q + 1;
      }
      if (rows == 0) {
        cols = count;
      } else if (count != cols) {
        throw pcs::Error(ErrorCode::InvalidMatrix, "ragged sandwich matrix");
      }
      ++rows;
      start = end + 1;
    }
    return out;
  }

  json check_pcs(pcs::Semigroup const& s, std::string_view method,
                 unsigned threads) {
    std::vector<pcs::Method> methods;
    if (method != "all") {
      methods.push_back(pcs::parse_method(method));
    }
    pcs::Verdict v = pcs::decide(s, methods, threads);
    json per = json::array();
    for (auto const& r : v.per_method) {
      json m = {{"method", pcs::to_string(r.method)},
                {"member", r.member},
                {"elapsed_ns", r.elapsed.count()}};
      m["witness"] = r.witness ? witness_json(s, *r.witness) : json(nullptr);
      per.push_back(std::move(m));
    }
    return {{"variety", "PCS"}, {"member", v.member}, {"methods", per}};
  }

  json check_variety(pcs::Semigroup const& s, std::string_view variety,
                     char const* engine) {
    pcs::Variety v = pcs::parse_variety(variety);
    pcs::Engine  e = engine ? pcs::parse_engine(engine) : pcs::Engine::structural;
    pcs::Membership m = pcs::is_member(s, v, e);
    return {{"variety", pcs::to_string(v)},
            {"engine", pcs::to_string(e)},
            {"member", m.member},
            {"witness", m.witness},
            {"reason", m.reason}};
  }

  json census_report_json(pcs::CensusReport const& r) {
    auto failures = [](std::vector<pcs::CensusFailure> const& list) {
      json out = json::array();
      for (auto const& f : list) {
        out.push_back({{"kind", f.kind},
                       {"order", f.order},
                       {"table", f.table},
                       {"detail", f.detail}});
      }
      return out;
    };
    json timing = json::object();
    for (auto const& [name, t] : r.timing) {
      timing[name] = t.count();
    }
    return {{"population", r.population},
            {"count_examined", r.count_examined},
            {"count_members", r.count_members},
            {"disagreements", failures(r.disagreements)},
            {"failures", failures(r.failures)},
            {"timing_ns", timing}};
  }

}  // namespace

extern "C" {

const char* pcs_last_error(void) {
  return last_error.c_str();
}

const char* pcs_status_name(pcs_status status) {
  switch (status) {
    case PCS_OK: return "Ok";
    case PCS_INTERNAL: return "Internal";
    default: break;
  }
  if (status > PCS_OK && status < PCS_INTERNAL) {
    return pcs::to_string(static_cast<ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

void pcs_string_free(char* s) {
  std::free(s);
}

pcs_status pcs_semigroup_create(size_t order, const uint32_t* table,
                                pcs_semigroup** out) {
  return guarded([&] {
    require(table, "table");
    hand_over(pcs::Semigroup::from_table(
                  order, std::vector<Element>(table, table + order * order)),
              out);
  });
}

pcs_status pcs_semigroup_parse_sg(const char* text, pcs_semigroup** out) {
  return guarded([&] {
    require(text, "text");
    hand_over(pcs::parse_sg(text), out);
  });
}

pcs_status pcs_semigroup_load(const char* path, pcs_semigroup** out) {
  return guarded([&] {
    require(path, "path");
    hand_over(pcs::load_sg(path), out);
  });
}

void pcs_semigroup_destroy(pcs_semigroup* s) {
  delete s;
}

size_t pcs_semigroup_order(const pcs_semigroup* s) {
  return s ? s->value.order() : 0;
}

pcs_status pcs_semigroup_multiply(const pcs_semigroup* s, uint32_t a, uint32_t b,
                                  uint32_t* out) {
  return guarded([&] {
    require(s, "semigroup");
    require(out, "out");
    if (a >= s->value.order() || b >= s->value.order()) {
      throw pcs::Error(ErrorCode::IndexOutOfRange, "element out of range");
    }
    *out = s->value.product(a, b);
  });
}

pcs_status pcs_semigroup_write_sg(const pcs_semigroup* s, char** out) {
  return guarded([&] {
    require(s, "semigroup");
    require(out, "out");
    *out = copy_out(pcs::format_sg(s->value));
  });
}

pcs_status pcs_power_semigroup(const pcs_semigroup* s, int with_empty, size_t cap,
                               pcs_semigroup** out) {
  return guarded([&] {
    require(s, "semigroup");
    hand_over(pcs::power_semigroup(s->value, with_empty != 0,
                                   or_default(cap, pcs::default_power_cap))
                  .result,
              out);
  });
}

pcs_status pcs_cyclic_group(size_t n, pcs_semigroup** out) {
  return guarded([&] { hand_over(pcs::cyclic_group(n), out); });
}

pcs_status pcs_rees_matrix(const pcs_semigroup* group, const char* matrix,
                           pcs_semigroup** out) {
  return guarded([&] {
    require(group, "group");
    require(matrix, "matrix");
    std::size_t lambda = 0, i_size = 0;
    auto        p      = parse_matrix(matrix, lambda, i_size);
    hand_over(pcs::rees_matrix(group->value, i_size, lambda, p), out);
  });
}

pcs_status pcs_consolidate(const pcs_semigroup* s, size_t cap,
                           pcs_semigroup** out) {
  return guarded([&] {
    require(s, "semigroup");
    hand_over(pcs::consolidate(s->value,
                               or_default(cap, pcs::default_consolidation_cap))
                  .result,
              out);
  });
}

pcs_status pcs_check(const pcs_semigroup* s, const char* variety,
                     const char* method, unsigned threads, char** out) {
  return guarded([&] {
    require(s, "semigroup");
    require(variety, "variety");
    std::string_view v(variety);
    bool             pcs_variety = v.size() == 3
                       && std::tolower(v[0]) == 'p' && std::tolower(v[1]) == 'c'
                       && std::tolower(v[2]) == 's';
    emit(pcs_variety ? check_pcs(s->value, method ? method : "all", threads)
                     : check_variety(s->value, v, method),
         out);
  });
}

pcs_status pcs_eval_identity(const pcs_semigroup* s, const char* identity,
                             char** out) {
  return guarded([&] {
    require(s, "semigroup");
    require(identity, "identity");
    pcs::Pseudoidentity id = pcs::parse_identity(identity);
    pcs::CheckResult    r  = pcs::check(s->value, id);
    json j = {{"identity", pcs::format(id)}, {"satisfied", r.satisfied}};
    j["counterexample"]
        = r.counterexample ? counterexample_json(*r.counterexample) : json(nullptr);
    emit(j, out);
  });
}

pcs_status pcs_green(const pcs_semigroup* s, char** out) {
  return guarded([&] {
    require(s, "semigroup");
    pcs::GreenData g = pcs::green_classes(s->value);
    emit({{"R", partition_json(g.r)},
          {"L", partition_json(g.l)},
          {"H", partition_json(g.h)},
          {"J", partition_json(g.j)},
          {"idempotents", s->value.idempotents()}},
         out);
  });
}

pcs_status pcs_ideal(const pcs_semigroup* s, uint32_t element, const char* side,
                     char** out) {
  return guarded([&] {
    require(s, "semigroup");
    require(side, "side");
    if (element >= s->value.order()) {
      throw pcs::Error(ErrorCode::IndexOutOfRange, "element out of range");
    }
    pcs::SubSemigroup sub = pcs::principal_ideal(s->value, element,
                                                 parse_side(side));
    emit({{"element", element},
          {"side", side},
          {"members", sub.to_parent},
          {"table", table_json(sub.local)}},
         out);
  });
}

pcs_status pcs_verify_power_theorem(const pcs_semigroup* s, size_t cap,
                                    char** out) {
  return guarded([&] {
    require(s, "semigroup");
    auto r = pcs::verify_power_theorem(
        s->value, or_default(cap, pcs::default_power_theorem_cap));
    json pre = json::array();
    for (auto const& p : r.preimages) {
      pre.push_back({{"r_classes", p.r_classes},
                     {"idempotent", p.idempotent},
                     {"l_classes", p.l_classes},
                     {"members", p.members},
                     {"base_i", p.base_i},
                     {"closed", p.closed},
                     {"j_trivial", p.j_trivial},
                     {"idempotents_cover_i", p.idempotents_cover_i},
                     {"contains_base_i", p.contains_base_i}});
    }
    emit({{"power_order", r.power_order},
          {"r_class_count", r.r_class_count},
          {"l_class_count", r.l_class_count},
          {"triples_examined", r.triples_examined},
          {"preimage_count", r.preimages.size()},
          {"passed", r.passed()},
          {"preimages", pre}},
         out);
  });
}

pcs_status pcs_division_witness(const pcs_semigroup* s, size_t cap, char** out) {
  return guarded([&] {
    require(s, "semigroup");
    auto r = pcs::division_witness(
        s->value, or_default(cap, pcs::default_consolidation_cap));
    emit({{"consolidation_order", r.consolidation_order},
          {"u_order", r.u.order()},
          {"generators", s->value.order()},
          {"cover", r.cover},
          {"homomorphism", r.homomorphism},
          {"surjective", r.surjective},
          {"verified", r.verified()}},
         out);
  });
}

pcs_status pcs_replay_witness(const pcs_semigroup* s, const char* method,
                              const char* witness, char** out) {
  return guarded([&] {
    require(s, "semigroup");
    require(method, "method");
    require(witness, "witness");
    pcs::Method m = pcs::parse_method(method);
    bool        reproduced
        = pcs::replay_witness(s->value, m, witness_from(json::parse(witness)));
    emit({{"method", pcs::to_string(m)}, {"reproduced", reproduced}}, out);
  });
}

pcs_status pcs_census(const pcs_population* population, int dedup,
                      int cross_validate, unsigned threads, char** out) {
  return guarded([&] {
    require(population, "population");
    pcs::Population p;
    p.kind       = static_cast<pcs::Population::Kind>(population->kind);
    p.order      = population->order;
    p.degree     = population->degree;
    p.gens       = population->gens;
    p.count      = population->count;
    p.seed       = population->seed;
    p.with_empty = population->with_empty != 0;
    if (population->kind < PCS_POPULATION_EXHAUSTIVE
        || population->kind > PCS_POPULATION_POWER_OF_CS) {
      throw pcs::Error(ErrorCode::InvalidArgument, "unknown population kind");
    }
    if (!cross_validate) {
      if (p.kind != pcs::Population::Kind::exhaustive) {
        throw pcs::Error(ErrorCode::InvalidArgument,
                         "only exhaustive populations can be counted");
      }
      std::size_t count = 0;
      pcs::for_each_semigroup(p.order, dedup != 0,
                              [&](pcs::Semigroup const&) { ++count; });
      emit({{"population", p.describe()}, {"dedup", dedup != 0}, {"count", count}},
           out);
      return;
    }
    std::vector<pcs::Semigroup> members;
    if (dedup && p.kind == pcs::Population::Kind::exhaustive) {
      members = pcs::enumerate_semigroups(p.order, true);
    } else {
      members = pcs::generate(p);
    }
    std::string description = p.describe() + (dedup ? " dedup" : "");
    emit(census_report_json(pcs::cross_validate(members, description, threads)),
         out);
  });
}

pcs_status pcs_identity_format(const char* text, char** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = copy_out(pcs::format(pcs::parse_identity(text)));
  });
}

pcs_status pcs_identity_builtin(const char* name, char** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = copy_out(pcs::format(pcs::builtin(name)));
  });
}

pcs_status pcs_transform_star_rz(const char* identity, char** out) {
  return guarded([&] {
    require(identity, "identity");
    pcs::Pseudoidentity id = pcs::parse_identity(identity);
    json                list = json::array();
    for (auto const& t : pcs::transform_star_rz(id)) {
      list.push_back(pcs::format(t));
    }
    emit({{"identity", pcs::format(id)}, {"count", list.size()},
          {"identities", list}},
         out);
  });
}

}  // extern "C"
