// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

// pcskit: command-line front end over libpcskit's C interface.
//
// Exit codes: 0 ran (member, where that applies), 3 ran (not a member),
// 1 usage error, 2 invalid input, 4 internal self-check failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcskit/pcskit.h"

namespace {

  using nlohmann::json;
  using ordered_json = nlohmann::ordered_json;

  enum Exit { ok = 0, usage = 1, invalid = 2, not_member = 3, internal = 4 };

  struct Failure {
    pcs_status  status;
    std::string message;
  };

  int exit_code(pcs_status s) {
    switch (s) {
      case PCS_OK: return ok;
      case PCS_UNKNOWN_NAME:
      case PCS_UNKNOWN_VARIETY: return usage;
      case PCS_NOT_IN_PCS: return not_member;
      case PCS_METHOD_DISAGREEMENT:
      case PCS_COVER_NOT_FUNCTIONAL:
      case PCS_INTERNAL: return internal;
      default: return invalid;
    }
  }

  void call(pcs_status s) {
    if (s != PCS_OK) {
      throw Failure{s, pcs_last_error()};
    }
  }

  struct SemigroupDeleter {
    void operator()(pcs_semigroup* s) const {
      pcs_semigroup_destroy(s);
    }
  };
  using Handle = std::unique_ptr<pcs_semigroup, SemigroupDeleter>;

  Handle load(std::string const& path) {
    pcs_semigroup* s = nullptr;
    call(pcs_semigroup_load(path.c_str(), &s));
    return Handle(s);
  }

  // Collects a char* out-parameter and frees it.
  template <typename F>
  std::string text_of(F&& f) {
    char* out = nullptr;
    call(f(&out));
    std::string s(out);
    pcs_string_free(out);
    return s;
  }

  // A builtin name ("bg", "pcs-iii", ...) or the text of a pseudoidentity.
  std::string resolve_identity(std::string const& id) {
    if (id.find('=') != std::string::npos) {
      return id;
    }
    return text_of([&](char** out) { return pcs_identity_builtin(id.c_str(), out); });
  }

  template <typename F>
  json json_of(F&& f) {
    return json::parse(text_of(std::forward<F>(f)));
  }

  std::string sg_text(Handle const& s) {
    return text_of([&](char** o) { return pcs_semigroup_write_sg(s.get(), o); });
  }

  struct Options {
    bool          as_json = false;
    std::uint64_t seed    = 0;
    std::size_t   cap     = 0;
    unsigned      threads = 1;
  };

  // What a subcommand produces; printed either as text or as one JSON object.
  struct Report {
    std::string command;
    json        input   = json::object();
    json        result  = json::object();
    json        witnesses = json::object();
    json        timing  = json::object();
    std::string text;
    int         code = ok;
  };

  std::string list(json const& values) {
    std::string out;
    for (auto const& v : values) {
      out += (out.empty() ? "" : " ") + v.dump();
    }
    return out;
  }

  std::string describe_witness(json const& w) {
    std::string out;
    if (w.contains("anchor_labels")) {
      std::string names;
      for (auto const& l : w["anchor_labels"]) {
        names += (names.empty() ? "" : ",") + l.get<std::string>();
      }
      out += "anchors (" + names + ")";
    } else if (w.contains("anchors")) {
      out += "anchors (" + list(w["anchors"]) + ")";
    }
    if (w.contains("side")) {
      out += " side " + w["side"].get<std::string>();
    }
    if (w.contains("inner")) {
      out += " violating {" + list(w["inner"]) + "}";
    }
    if (w.contains("identity")) {
      out += "identity " + w["identity"].get<std::string>();
    }
    if (w.contains("counterexample")) {
      out += " at";
      for (auto const& [k, v] : w["counterexample"]["assignment"].items()) {
        out += " " + k + "=" + v.dump();
      }
    }
    return out;
  }

  void run_check(Report& r, Options const& o, std::string const& file,
                 std::string const& variety, std::string const& method) {
    Handle s = load(file);
    r.input  = {{"file", file}, {"variety", variety}, {"method", method}};
    char const* m = method.empty() ? nullptr : method.c_str();
    json res = json_of(
        [&](char** out) { return pcs_check(s.get(), variety.c_str(), m, o.threads, out); });
    bool member = res["member"].get<bool>();
    std::string text = variety + ": " + (member ? "member" : "not a member") + "\n";
    if (res.contains("methods")) {
      for (auto& entry : res["methods"]) {
        std::string name = entry["method"];
        r.timing[name + "_ns"] = entry["elapsed_ns"];
        entry.erase("elapsed_ns");
        text += "  " + name + ": " + (entry["member"].get<bool>() ? "yes" : "no");
        if (!entry["witness"].is_null()) {
          r.witnesses[name] = entry["witness"];
          text += "  " + describe_witness(entry["witness"]);
        }
        text += "\n";
      }
    } else if (!member) {
      r.witnesses[res["variety"].get<std::string>()] = {
          {"elements", res["witness"]}, {"reason", res["reason"]}};
      text += "  witness {" + list(res["witness"]) + "}: "
              + res["reason"].get<std::string>() + "\n";
    }
    r.result = res;
    r.text   = text;
    r.code   = member ? ok : not_member;
  }

  void run_eval(Report& r, std::string const& file, std::string const& id) {
    Handle s = load(file);
    r.input  = {{"file", file}, {"identity", id}};
    std::string text = resolve_identity(id);
    json        res  = json_of(
        [&](char** out) { return pcs_eval_identity(s.get(), text.c_str(), out); });
    bool sat = res["satisfied"].get<bool>();
    r.text   = res["identity"].get<std::string>() + ": "
             + (sat ? "satisfied" : "fails") + "\n";
    if (!sat) {
      r.witnesses["counterexample"] = res["counterexample"];
      r.text += "  counterexample";
      for (auto const& [k, v] : res["counterexample"]["assignment"].items()) {
        r.text += " " + k + "=" + v.dump();
      }
      r.text += "  (lhs " + res["counterexample"]["lhs"].dump() + ", rhs "
                + res["counterexample"]["rhs"].dump() + ")\n";
    }
    r.result = res;
    r.code   = sat ? ok : not_member;
  }

  void emit_semigroup(Report& r, Handle const& s) {
    std::string sg = sg_text(s);
    r.result       = {{"order", pcs_semigroup_order(s.get())}, {"sg", sg}};
    r.text         = sg;
  }

  void run_power(Report& r, Options const& o, std::string const& file,
                 bool with_empty) {
    Handle s = load(file);
    r.input  = {{"file", file}, {"with_empty", with_empty}};
    pcs_semigroup* p = nullptr;
    call(pcs_power_semigroup(s.get(), with_empty ? 1 : 0, o.cap, &p));
    emit_semigroup(r, Handle(p));
  }

  void run_green(Report& r, std::string const& file) {
    Handle s = load(file);
    r.input  = {{"file", file}};
    r.result = json_of([&](char** out) { return pcs_green(s.get(), out); });
    for (char const* rel : {"R", "L", "H", "J"}) {
      r.text += std::string(rel) + ":";
      for (auto const& cls : r.result[rel]) {
        r.text += " {" + list(cls) + "}";
      }
      r.text += "\n";
    }
    r.text += "idempotents: " + list(r.result["idempotents"]) + "\n";
  }

  void run_ideal(Report& r, std::string const& file, unsigned element,
                 std::string const& side) {
    Handle s = load(file);
    r.input  = {{"file", file}, {"element", element}, {"side", side}};
    r.result = json_of([&](char** out) {
      return pcs_ideal(s.get(), element, side.c_str(), out);
    });
    r.text = "members: " + list(r.result["members"]) + "\n";
  }

  void run_rees(Report& r, std::string const& group, std::string const& matrix) {
    Handle g = load(group);
    r.input  = {{"group", group}, {"p", matrix}};
    pcs_semigroup* m = nullptr;
    call(pcs_rees_matrix(g.get(), matrix.c_str(), &m));
    emit_semigroup(r, Handle(m));
  }

  void run_consolidate(Report& r, Options const& o, std::string const& file) {
    Handle s = load(file);
    r.input  = {{"file", file}};
    pcs_semigroup* c = nullptr;
    call(pcs_consolidate(s.get(), o.cap, &c));
    Handle bg(c);
    json   check = json_of([&](char** out) {
      return pcs_check(bg.get(), "BG", nullptr, 1, out);
    });
    emit_semigroup(r, bg);
    r.result["block_group"] = check["member"];
    r.text = "order " + std::to_string(pcs_semigroup_order(bg.get()))
             + (check["member"].get<bool>() ? ", block group\n"
                                            : ", not a block group\n")
             + r.text;
    // A consolidation that is not a block group contradicts the theory.
    r.code = check["member"].get<bool>() ? ok : internal;
  }

  void run_verify(Report& r, Options const& o, std::string const& file) {
    Handle s = load(file);
    r.input  = {{"file", file}};
    r.result = json_of([&](char** out) {
      return pcs_verify_power_theorem(s.get(), o.cap, out);
    });
    bool passed = r.result["passed"].get<bool>();
    r.text      = "P(S) order " + r.result["power_order"].dump() + ", "
             + r.result["triples_examined"].dump() + " triples, "
             + r.result["preimage_count"].dump() + " non-empty preimages: "
             + (passed ? "all checks pass" : "CHECK FAILED") + "\n";
    r.code = passed ? ok : internal;
  }

  void run_division(Report& r, Options const& o, std::string const& file) {
    Handle s = load(file);
    r.input  = {{"file", file}};
    r.result = json_of([&](char** out) {
      return pcs_division_witness(s.get(), o.cap, out);
    });
    bool verified = r.result["verified"].get<bool>();
    r.witnesses["cover"] = r.result["cover"];
    r.text = "BG(S) order " + r.result["consolidation_order"].dump()
             + ", U order " + r.result["u_order"].dump() + ": "
             + (verified ? "surjective homomorphism U -> S verified"
                         : "VERIFICATION FAILED")
             + "\n";
    r.code = verified ? ok : internal;
  }

  struct CensusArgs {
    std::size_t order = 3;
    bool        dedup = false;
    bool        cross = false;
    std::string population = "exhaustive";
    std::size_t degree = 3, gens = 2, count = 10;
    bool        with_empty = false;
  };

  void run_census(Report& r, Options const& o, CensusArgs const& a) {
    pcs_population p{};
    if (a.population == "exhaustive") {
      p.kind = PCS_POPULATION_EXHAUSTIVE;
    } else if (a.population == "transformation") {
      p.kind = PCS_POPULATION_TRANSFORMATION;
    } else if (a.population == "rees") {
      p.kind = PCS_POPULATION_REES;
    } else {
      p.kind = PCS_POPULATION_POWER_OF_CS;
    }
    p.order      = a.order;
    p.degree     = a.degree;
    p.gens       = a.gens;
    p.count      = a.count;
    p.seed       = o.seed;
    p.with_empty = a.with_empty ? 1 : 0;
    r.input      = {{"population", a.population},
                    {"order", a.order},
                    {"dedup", a.dedup},
                    {"cross_validate", a.cross}};
    r.result = json_of([&](char** out) {
      return pcs_census(&p, a.dedup ? 1 : 0, a.cross ? 1 : 0, o.threads, out);
    });
    if (!a.cross) {
      r.text = r.result["count"].dump() + "\n";
      return;
    }
    r.timing = r.result["timing_ns"];
    r.result.erase("timing_ns");
    auto const& dis = r.result["disagreements"];
    auto const& fail = r.result["failures"];
    r.text = r.result["population"].get<std::string>() + ": examined "
             + r.result["count_examined"].dump() + ", members "
             + r.result["count_members"].dump() + ", disagreements "
             + std::to_string(dis.size()) + ", failures "
             + std::to_string(fail.size()) + "\n";
    for (auto const* group : {&dis, &fail}) {
      for (auto const& f : *group) {
        r.text += "  " + f["kind"].get<std::string>() + " order "
                  + f["order"].dump() + " table " + list(f["table"]) + ": "
                  + f["detail"].get<std::string>() + "\n";
      }
    }
    r.code = dis.empty() && fail.empty() ? ok : internal;
  }

  void run_transform(Report& r, std::string const& id) {
    r.input  = {{"identity", id}};
    std::string text = resolve_identity(id);
    r.result = json_of(
        [&](char** out) { return pcs_transform_star_rz(text.c_str(), out); });
    for (auto const& t : r.result["identities"]) {
      r.text += t.get<std::string>() + "\n";
    }
  }

  void run_replay(Report& r, std::string const& file, std::string const& method,
                  std::string const& witness) {
    Handle s = load(file);
    r.input  = {{"file", file}, {"method", method}, {"witness", witness}};
    r.result = json_of([&](char** out) {
      return pcs_replay_witness(s.get(), method.c_str(), witness.c_str(), out);
    });
    bool again = r.result["reproduced"].get<bool>();
    r.text     = method + (again ? ": witness reproduces non-membership\n"
                                 : ": witness does not reproduce\n");
    r.code = again ? ok : not_member;
  }

  void print(Report const& r, Options const& o) {
    if (!o.as_json) {
      std::cout << r.text;
      return;
    }
    ordered_json out;
    out["command"]   = r.command;
    out["input"]     = r.input;
    out["result"]    = r.result;
    out["witnesses"] = r.witnesses;
    out["timing"]    = r.timing;
    std::cout << out.dump(2) << '\n';
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups and membership in PCS"};
  app.require_subcommand(1);

  Options o;
  o.threads = std::max(1U, std::thread::hardware_concurrency());
  app.add_flag("--json", o.as_json, "Emit one JSON object");
  app.add_option("--seed", o.seed, "Seed for random populations");
  app.add_option("--cap", o.cap, "Size cap for constructions (0: default)");
  app.add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string file, variety, method = "", id, side, group, matrix, witness;
  unsigned    element    = 0;
  bool        with_empty = false;
  CensusArgs  census;

  auto* check = app.add_subcommand("check", "Decide membership in a variety");
  check->add_option("--variety", variety, "Variety name or pcs")->required();
  check->add_option("--method", method,
                    "PCS method or all; engine for other varieties");
  check->add_option("FILE", file)->required();

  auto* eval = app.add_subcommand("eval", "Check a pseudoidentity");
  eval->add_option("--id", id, "Pseudoidentity or builtin name")->required();
  eval->add_option("FILE", file)->required();

  auto* power = app.add_subcommand("power", "Power semigroup");
  power->add_flag("--with-empty", with_empty, "Adjoin the empty set");
  power->add_option("FILE", file)->required();

  auto* green = app.add_subcommand("green", "Green's relations");
  green->add_option("FILE", file)->required();

  auto* ideal = app.add_subcommand("ideal", "Principal one-sided ideal");
  ideal->add_option("--element", element)->required();
  ideal->add_option("--side", side)
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  ideal->add_option("FILE", file)->required();

  auto* rees = app.add_subcommand("rees", "Rees matrix semigroup");
  rees->add_option("--group", group, "Group as a .sg file")->required();
  rees->add_option("--p", matrix, "Sandwich matrix, rows by ';'")->required();

  auto* consolidate = app.add_subcommand("consolidate", "Consolidation BG(S)");
  consolidate->add_option("FILE", file)->required();

  auto* verify = app.add_subcommand("verify-theorem",
                                    "Check idempotent preimages for P(S)");
  verify->add_option("FILE", file)->required();

  auto* division = app.add_subcommand("division",
                                       "Division of S into BG(S) wr RZ(S)");
  division->add_option("FILE", file)->required();

  auto* cen = app.add_subcommand("census", "Enumerate and cross-validate");
  cen->add_option("--order", census.order, "Order (exhaustive), max order "
                                           "(power-of-cs)");
  cen->add_flag("--dedup", census.dedup, "Up to isomorphism");
  cen->add_flag("--cross-validate", census.cross, "Run all methods");
  cen->add_option("--population", census.population)
      ->check(CLI::IsMember(
          {"exhaustive", "transformation", "rees", "power-of-cs"}));
  cen->add_option("--degree", census.degree);
  cen->add_option("--gens", census.gens);
  cen->add_option("--count", census.count);
  cen->add_flag("--with-empty", census.with_empty);

  auto* transform = app.add_subcommand("transform-star-rz",
                                       "Transform an identity for * RZ");
  transform->add_option("--id", id, "Pseudoidentity or builtin name")->required();

  auto* replay = app.add_subcommand("replay", "Replay a method witness");
  replay->add_option("--method", method)->required();
  replay->add_option("--witness", witness, "Witness JSON")->required();
  replay->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return usage;
  }

  Report r;
  auto   start = std::chrono::steady_clock::now();
  try {
    if (*check) {
      r.command = "check";
      run_check(r, o, file, variety, method);
    } else if (*eval) {
      r.command = "eval";
      run_eval(r, file, id);
    } else if (*power) {
      r.command = "power";
      run_power(r, o, file, with_empty);
    } else if (*green) {
      r.command = "green";
      run_green(r, file);
    } else if (*ideal) {
      r.command = "ideal";
      run_ideal(r, file, element, side);
    } else if (*rees) {
      r.command = "rees";
      run_rees(r, group, matrix);
    } else if (*consolidate) {
      r.command = "consolidate";
      run_consolidate(r, o, file);
    } else if (*verify) {
      r.command = "verify-theorem";
      run_verify(r, o, file);
    } else if (*division) {
      r.command = "division";
      run_division(r, o, file);
    } else if (*cen) {
      r.command = "census";
      run_census(r, o, census);
    } else if (*transform) {
      r.command = "transform-star-rz";
      run_transform(r, id);
    } else if (*replay) {
      r.command = "replay";
      run_replay(r, file, method, witness);
    }
  } catch (Failure const& f) {
    std::cerr << "pcskit: " << pcs_status_name(f.status) << ": " << f.message
              << '\n';
    return exit_code(f.status);
  } catch (std::exception const& e) {
    std::cerr << "pcskit: " << e.what() << '\n';
    return internal;
  }
  r.timing["total_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  print(r, o);
  return r.code;
}
