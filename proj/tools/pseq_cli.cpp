// Command-line front end over the public C interface.  Models are named by
// catalog entry or by a multiplication-table file; all output is
// deterministic for a fixed invocation.
//
// Exit codes: 0 success (and satisfied/valid/accepted verdicts), 1 negative
// verdict (unsatisfied, invalid, rejected, audit violation), 2 bad usage or
// malformed input.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pseq/pseq.h"

namespace {

// Owns one API string.
struct ApiStr {
  char* p = nullptr;
  ~ApiStr() { pseq_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct TermHandle {
  pseq_term* t = nullptr;
  ~TermHandle() { pseq_term_free(t); }
};

struct SgHandle {
  pseq_sg* s = nullptr;
  ~SgHandle() { pseq_sg_free(s); }
};

struct ProofHandle {
  pseq_proof* p = nullptr;
  ~ProofHandle() { pseq_proof_free(p); }
};

[[noreturn]] void die(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  std::exit(2);
}

void require_ok(pseq_status st) {
  if (st != PSEQ_OK) die(pseq_last_error());
}

pseq_sig sig_of(const std::string& name) {
  if (name == "monoid") return PSEQ_SIG_MONOID;
  if (name == "semigroup") return PSEQ_SIG_SEMIGROUP;
  die("signature must be 'monoid' or 'semigroup'");
}

pseq_term* parse_term_arg(const std::string& src, pseq_sig sig) {
  pseq_term* t = nullptr;
  require_ok(pseq_term_parse(src.c_str(), sig, &t));
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A model argument is a table file when it names one, else a catalog name.
pseq_sg* resolve_model(const std::string& arg) {
  pseq_sg* s = nullptr;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::string text = read_file(arg);
    std::string base = std::filesystem::path(arg).stem().string();
    require_ok(pseq_sg_from_table(text.c_str(), base.c_str(), &s));
  } else {
    require_ok(pseq_sg_from_name(arg.c_str(), &s));
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omega-term reasoning over finite semigroups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pseq_version());

  std::string term_src, term2_src, model_arg, assign, sig_name = "monoid";
  std::string proof_file, audit_pool, sandwich = "-", mode;
  bool do_normalize = false, expand = false, rees_normalize = false;
  bool rees_counts = false;
  int order = 1, rees_i = 1, rees_l = 1;

  auto* parse = app.add_subcommand("parse", "parse a term and print it");
  parse->add_option("term", term_src, "term text")->required();
  parse->add_option("--sig", sig_name, "signature: monoid or semigroup")
      ->capture_default_str();
  parse->add_flag("--normalize", do_normalize, "print the normal form");

  auto* eval = app.add_subcommand("eval", "evaluate a term in a model");
  eval->add_option("term", term_src, "constant term")->required();
  eval->add_option("--model", model_arg, "catalog name or table file")
      ->required();
  eval->add_option("--assign", assign, "letter=element pairs, e.g. x=a,y=b")
      ->required();
  eval->add_option("--sig", sig_name, "signature: monoid or semigroup")
      ->capture_default_str();

  auto* sat = app.add_subcommand(
      "satisfies", "check an identity in one model; prints true or false "
                   "with the first failing assignment");
  sat->add_option("model", model_arg, "catalog name or table file")
      ->required();
  sat->add_option("lhs", term_src, "left side")->required();
  sat->add_option("rhs", term2_src, "right side")->required();
  sat->add_option("--sig", sig_name, "signature: monoid or semigroup")
      ->capture_default_str();

  auto* dec = app.add_subcommand(
      "decide", "decide validity over all finite groups or all finite "
                "commutative models");
  dec->add_option("class", mode, "group or com")->required();
  dec->add_option("lhs", term_src, "left side")->required();
  dec->add_option("rhs", term2_src, "right side")->required();
  dec->add_option("--sig", sig_name, "signature: monoid or semigroup")
      ->capture_default_str();

  auto* chk = app.add_subcommand("check-proof", "check a proof script file");
  chk->add_option("file", proof_file, "script file")->required();
  chk->add_option("--audit", audit_pool,
                  "model-check all step claims over a pool: 'default' or "
                  "comma-separated catalog names");
  chk->add_flag("--expand-macros", expand,
                "print the script with macro steps expanded");

  app.add_subcommand("catalog", "list the built-in model catalog");

  auto* rees = app.add_subcommand(
      "rees", "build a Rees matrix semigroup over a catalog group");
  rees->add_option("group", model_arg, "catalog group name")->required();
  rees->add_option("I", rees_i, "size of the row index set")->required();
  rees->add_option("Lambda", rees_l, "size of the column index set")
      ->required();
  rees->add_option("--sandwich", sandwich,
                   "Lambda rows separated by ';', each I group element "
                   "names separated by ','; '-' for all-identity")
      ->capture_default_str();
  rees->add_flag("--normalize", rees_normalize,
                 "scale the sandwich matrix to normalized form first");
  rees->add_flag("--counts", rees_counts,
                 "also count congruences via linked triples and via direct "
                 "enumeration");

  auto* cong = app.add_subcommand(
      "congruences", "enumerate the congruences of a model");
  cong->add_option("model", model_arg, "catalog name or table file")
      ->required();

  auto* enu = app.add_subcommand(
      "enumerate", "count monoids of a given order up to isomorphism");
  enu->add_option("order", order, "order, 1 to 4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (parse->parsed()) {
    TermHandle t{parse_term_arg(term_src, sig_of(sig_name))};
    ApiStr out;
    if (do_normalize) {
      TermHandle n;
      require_ok(pseq_term_normalize(t.t, &n.t));
      require_ok(pseq_term_render(n.t, &out.p));
    } else {
      require_ok(pseq_term_render(t.t, &out.p));
    }
    std::cout << out.str() << "\n";
    return 0;
  }

  if (eval->parsed()) {
    SgHandle s{resolve_model(model_arg)};
    TermHandle t{parse_term_arg(term_src, sig_of(sig_name))};
    ApiStr out;
    require_ok(pseq_sg_eval(s.s, t.t, assign.c_str(), &out.p));
    std::cout << out.str() << "\n";
    return 0;
  }

  if (sat->parsed()) {
    SgHandle s{resolve_model(model_arg)};
    pseq_sig sig = sig_of(sig_name);
    TermHandle u{parse_term_arg(term_src, sig)};
    TermHandle v{parse_term_arg(term2_src, sig)};
    int holds = 0;
    ApiStr w;
    require_ok(pseq_sg_satisfies(s.s, u.t, v.t, &holds, &w.p));
    if (holds) {
      std::cout << "true\n";
      return 0;
    }
    std::cout << "false witness: " << w.str() << "\n";
    return 1;
  }

  if (dec->parsed()) {
    if (mode != "group" && mode != "com") die("class must be group or com");
    pseq_sig sig = sig_of(sig_name);
    TermHandle u{parse_term_arg(term_src, sig)};
    TermHandle v{parse_term_arg(term2_src, sig)};
    int valid = 0;
    ApiStr w;
    if (mode == "group")
      require_ok(pseq_decide_group(u.t, v.t, &valid, &w.p));
    else
      require_ok(pseq_decide_com(u.t, v.t, &valid, &w.p));
    if (valid) {
      std::cout << "valid\n";
      return 0;
    }
    if (w.str().empty())
      std::cout << "invalid\n";
    else
      std::cout << "invalid witness: " << w.str() << "\n";
    return 1;
  }

  if (chk->parsed()) {
    std::string text = read_file(proof_file);
    ProofHandle p;
    require_ok(pseq_proof_parse(text.c_str(), &p.p));
    int ok = 0;
    ApiStr step, reason;
    require_ok(pseq_proof_check(p.p, &ok, &step.p, &reason.p));
    if (!ok) {
      std::cout << "rejected step=" << step.str() << ": " << reason.str()
                << "\n";
      return 1;
    }
    std::cout << "accepted\n";
    if (expand) {
      ApiStr out;
      require_ok(pseq_proof_render_expanded(p.p, &out.p));
      std::cout << out.str();
    }
    if (!audit_pool.empty()) {
      int models = 0, checks = 0;
      ApiStr viol;
      require_ok(
          pseq_proof_audit(p.p, audit_pool.c_str(), &models, &checks, &viol.p));
      std::string v = viol.str();
      int nviol = 0;
      for (char c : v)
        if (c == '\n') ++nviol;
      std::cout << "audit: models=" << models << " checks=" << checks
                << " violations=" << nviol << "\n";
      if (nviol > 0) {
        std::cout << v;
        return 1;
      }
    }
    return 0;
  }

  if (app.get_subcommand("catalog")->parsed()) {
    ApiStr out;
    require_ok(pseq_catalog(&out.p));
    std::cout << out.str();
    return 0;
  }

  if (rees->parsed()) {
    SgHandle s;
    require_ok(pseq_rees_build(model_arg.c_str(), rees_i, rees_l,
                               sandwich.c_str(), rees_normalize ? 1 : 0,
                               &s.s));
    ApiStr table;
    require_ok(pseq_sg_render(s.s, &table.p));
    std::cout << table.str();
    if (rees_counts) {
      int triples = 0, congs = 0;
      require_ok(pseq_rees_congruence_counts(
          model_arg.c_str(), rees_i, rees_l, sandwich.c_str(),
          rees_normalize ? 1 : 0, &triples, &congs));
      std::cout << "triples=" << triples << " congruences=" << congs << "\n";
    }
    return 0;
  }

  if (cong->parsed()) {
    SgHandle s{resolve_model(model_arg)};
    ApiStr out;
    require_ok(pseq_sg_congruences(s.s, &out.p));
    std::cout << out.str();
    return 0;
  }

  if (enu->parsed()) {
    int count = 0;
    require_ok(pseq_count_monoids(order, &count));
    std::cout << "monoids of order " << order << ": " << count << "\n";
    return 0;
  }

  return 2;
}
