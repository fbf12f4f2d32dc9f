#include "ckf/report.hpp"

#include <fstream>
#include <sstream>

#include "ckf/oracle.hpp"
#include "ckf/prng.hpp"

namespace ckf {

std::string RunReport::serialize() const {
  std::ostringstream os;
  os << "schema run-report " << schema_version << "\n";
  os << "command " << command << "\n";
  for (const auto& [k, v] : meta) os << "meta " << k << " " << v << "\n";
  for (const auto& b : blocks) {
    os << "block " << b.kind << "\n";
    for (const auto& [k, v] : b.fields) os << k << " " << v << "\n";
    os << "end\n";
  }
  return os.str();
}

RunReport RunReport::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  RunReport r;
  if (!std::getline(is, line) || line.rfind("schema run-report ", 0) != 0)
    throw input_error("run report: missing schema header");
  r.schema_version = line.substr(18);
  bool in_block = false;
  ReportBlock cur;
  auto split = [](const std::string& l) {
    auto sp = l.find(' ');
    if (sp == std::string::npos) return std::make_pair(l, std::string());
    return std::make_pair(l.substr(0, sp), l.substr(sp + 1));
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto [key, value] = split(line);
    if (!in_block) {
      if (key == "command") {
        r.command = value;
      } else if (key == "meta") {
        auto [mk, mv] = split(value);
        r.meta.push_back({mk, mv});
      } else if (key == "block") {
        cur = ReportBlock{};
        cur.kind = value;
        in_block = true;
      } else {
        throw input_error("run report: unexpected line '" + line + "'");
      }
    } else if (key == "end" && value.empty()) {
      r.blocks.push_back(std::move(cur));
      in_block = false;
    } else {
      cur.fields.push_back({key, value});
    }
  }
  if (in_block) throw input_error("run report: unterminated block");
  return r;
}

namespace {

std::string spec_echo(const TripleSpec& s) {
  std::string h = s.h.generic_noncompact ? "noncompact" : s.h.desc.name;
  std::string e = embedding_kind_str(s.h.emb.kind);
  if (s.h.emb.kind == EmbeddingKind::table_one_identified)
    e += "[row " + std::to_string(s.h.emb.table_row) + ", n " +
         std::to_string(s.h.emb.table_n) + "]";
  if (s.h.emb.kind == EmbeddingKind::centralizer_witness && s.h.emb.witness)
    e += "[A " + vec_str(*s.h.emb.witness) + "]";
  std::string out = "(" + s.g.name + ", " + h + "+" + e;
  if (s.l) out += ", " + s.l->desc.name;
  return out + ")";
}

}  // namespace

std::vector<TripleSpec> parse_triples(const std::string& text,
                                      const Catalog& cat) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "schema triple-spec 1")
    throw input_error("triple specs: missing or unsupported schema header");
  std::vector<TripleSpec> out;
  int lineno = 1;
  bool in_rec = false;
  std::optional<std::string> g_name, h_name, l_name;
  EmbeddingDescriptor emb;
  bool h_generic = false;
  auto bad = [&](const std::string& why) {
    throw input_error("triple specs line " + std::to_string(lineno) + ": " +
                      why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "triple") {
      if (in_rec) bad("nested record");
      in_rec = true;
      g_name.reset();
      h_name.reset();
      l_name.reset();
      emb = EmbeddingDescriptor{};
      h_generic = false;
    } else if (!in_rec) {
      bad("field outside a record");
    } else if (tok == "g") {
      std::string n;
      ls >> n;
      g_name = n;
    } else if (tok == "h") {
      std::string n;
      ls >> n;
      if (n == "noncompact")
        h_generic = true;
      else
        h_name = n;
    } else if (tok == "l") {
      std::string n;
      ls >> n;
      l_name = n;
    } else if (tok == "embed") {
      std::string kind;
      ls >> kind;
      if (kind == "table-one") {
        std::string kw1, kw2;
        emb.kind = EmbeddingKind::table_one_identified;
        if (!(ls >> kw1 >> emb.table_row >> kw2 >> emb.table_n) ||
            kw1 != "row" || kw2 != "n")
          bad("expected 'embed table-one row R n N'");
      } else if (kind == "witness") {
        emb.kind = EmbeddingKind::centralizer_witness;
        QVec w;
        std::string x;
        while (ls >> x) w.push_back(Rat::parse(x));
        emb.witness = std::move(w);
      } else if (kind == "declared-regular-proper") {
        emb.kind = EmbeddingKind::declared_regular_proper;
      } else if (kind == "unspecified") {
        emb.kind = EmbeddingKind::unspecified;
      } else {
        bad("unknown embedding kind '" + kind + "'");
      }
    } else if (tok == "end") {
      if (!g_name) bad("record without g");
      if (!h_name && !h_generic) bad("record without h");
      TripleSpec spec;
      try {
        spec.g = cat.lookup(*g_name);
        spec.h.generic_noncompact = h_generic;
        if (h_generic) {
          spec.h.emb.kind = EmbeddingKind::split_ambient_generic;
        } else {
          spec.h.desc = cat.lookup_group(*h_name);
          spec.h.emb = emb;
        }
        if (l_name) {
          SubalgebraSpec l;
          l.desc = cat.lookup_group(*l_name);
          spec.l = std::move(l);
        }
      } catch (const input_error& e) {
        bad(e.what());
      }
      spec.source = spec_echo(spec);
      out.push_back(std::move(spec));
      in_rec = false;
    } else {
      bad("unknown field '" + tok + "'");
    }
  }
  if (in_rec) throw input_error("triple specs: unterminated record");
  return out;
}

std::vector<TripleSpec> load_triples_file(const std::string& path,
                                          const Catalog& cat) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open triple-spec file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_triples(ss.str(), cat);
}

LemmaHarnessResult run_lemma_harness(int rank_cap, int samples,
                                     std::uint64_t seed) {
  LemmaHarnessResult res;
  Prng rng(seed);
  for (const RootSystem* rsp : systems_up_to_rank(rank_cap)) {
    const RootSystem& rs = *rsp;
    ++res.systems;
    const auto& cw = rs.coweights();

    // Highest-root dominance at the barycenter and at random interior points.
    QVec a(static_cast<size_t>(rs.ambient));
    for (const auto& w : cw) a = vadd(a, w);
    ++res.dominance_cases;
    if (!dominance_check(rs, a)) ++res.dominance_failures;
    for (int s = 0; s < samples; ++s) {
      QVec pt(static_cast<size_t>(rs.ambient));
      for (const auto& w : cw)
        pt = vadd(pt, vscale(Rat(rng.in(1, 20), rng.in(1, 20)), w));
      ++res.dominance_cases;
      if (!dominance_check(rs, pt)) ++res.dominance_failures;
    }

    // Negative-pairing sum rule, exhaustive over ordered pairs.
    for (const auto& g1 : rs.roots)
      for (const auto& g2 : rs.roots) {
        if (vzero(vadd(g1, g2))) continue;
        ++res.sum_rule_pairs;
        if (!sum_rule_check(rs, g1, g2)) ++res.sum_rule_failures;
      }

    // Joint vanishing cover: coweight pairs, then random span vectors.
    auto span_vec = [&]() {
      for (;;) {
        QVec v(static_cast<size_t>(rs.ambient));
        bool all_zero = true;
        for (const auto& s : rs.simple) {
          Rat c = rng.rat();
          if (!c.is_zero()) all_zero = false;
          v = vadd(v, vscale(c, s));
        }
        if (!all_zero) return v;
      }
    };
    for (const auto& x : cw)
      for (const auto& h : cw) {
        ++res.cover_cases;
        if (cover_check(rs, x, h)) ++res.cover_failures;
      }
    for (int s = 0; s < samples; ++s) {
      ++res.cover_cases;
      if (cover_check(rs, span_vec(), span_vec())) ++res.cover_failures;
    }
  }
  return res;
}

RunReport verdict_report(const std::string& input_name,
                         const std::vector<TripleSpec>& specs,
                         const Catalog& cat, const TableOne& table) {
  RunReport r;
  r.command = "verdict";
  r.meta.push_back({"input", input_name});
  r.meta.push_back({"records", std::to_string(specs.size())});
  int idx = 0;
  for (const auto& spec : specs) {
    Verdict v = classify(spec, cat, table);
    ReportBlock b;
    b.kind = "verdict";
    b.fields.push_back({"record", std::to_string(++idx)});
    b.fields.push_back({"spec", spec.source});
    b.fields.push_back({"outcome", outcome_str(v.outcome)});
    for (const auto& step : v.trace)
      b.fields.push_back(
          {"step", step.rule + " | " + step.citation + " | " + step.values});
    r.blocks.push_back(std::move(b));
  }
  return r;
}

RunReport table1_report(const TableOne& table, int max_n) {
  if (max_n < 1) throw precondition_error("verify-table1: max_n >= 1");
  RunReport r;
  r.command = "verify-table1";
  r.meta.push_back({"max_n", std::to_string(max_n)});
  int failures = 0;
  for (const auto& inst : table.instances(max_n)) {
    ReportBlock b;
    b.kind = "identity";
    b.fields.push_back({"row", std::to_string(inst.row)});
    b.fields.push_back({"n", std::to_string(inst.n)});
    b.fields.push_back({"triple", "(" + inst.g + ", " + inst.h + ", " +
                                      inst.l + ")"});
    std::ostringstream os;
    os << inst.dg << " = " << inst.dh << " + " << inst.dl;
    b.fields.push_back({"d", os.str()});
    b.fields.push_back({"holds", inst.identity_holds() ? "true" : "false"});
    if (!inst.identity_holds()) ++failures;
    const TableOneRow& row = table.row(inst.row);
    if (row.duplicate_of)
      b.fields.push_back(
          {"note", "verbatim duplicate of row " +
                       std::to_string(row.duplicate_of) + "; kept, not merged"});
    r.blocks.push_back(std::move(b));
  }
  r.meta.push_back({"failures", std::to_string(failures)});
  return r;
}

RunReport lemmas_report(int rank_cap, int samples, std::uint64_t seed) {
  LemmaHarnessResult res = run_lemma_harness(rank_cap, samples, seed);
  RunReport r;
  r.command = "lemmas";
  r.meta.push_back({"rank_cap", std::to_string(rank_cap)});
  r.meta.push_back({"samples", std::to_string(samples)});
  r.meta.push_back({"seed", std::to_string(seed)});
  r.meta.push_back({"systems", std::to_string(res.systems)});
  auto block = [&](const std::string& name, long cases, long failures) {
    ReportBlock b;
    b.kind = "harness";
    b.fields.push_back({"check", name});
    b.fields.push_back({"cases", std::to_string(cases)});
    b.fields.push_back({"counterexamples", std::to_string(failures)});
    r.blocks.push_back(std::move(b));
  };
  block("highest-root-dominance", res.dominance_cases, res.dominance_failures);
  block("negative-pairing-sum", res.sum_rule_pairs, res.sum_rule_failures);
  block("vanishing-cover", res.cover_cases, res.cover_failures);
  r.meta.push_back({"counterexamples", std::to_string(res.counterexamples())});
  return r;
}

RunReport sweep_run_report(const SweepReport& sweep) {
  RunReport r;
  r.command = "sweep";
  r.meta.push_back({"family", sweep_family_str(sweep.family)});
  r.meta.push_back({"max_param", std::to_string(sweep.max_param)});
  for (const auto& e : sweep.entries) {
    ReportBlock b;
    b.kind = "sweep";
    b.fields.push_back({"g", e.g_name});
    b.fields.push_back({"h", e.h_name});
    b.fields.push_back(
        {"engine", e.engine_no_standard ? "NoStandard" : "no-rule"});
    b.fields.push_back({"corollary", e.in_corollary_scope
                                         ? (e.corollary_claims ? "NoStandard"
                                                               : "silent")
                                         : "out-of-scope"});
    b.fields.push_back({"status", e.status});
    r.blocks.push_back(std::move(b));
  }
  r.meta.push_back({"divergences", std::to_string(sweep.divergences)});
  return r;
}

RunReport catalog_list_report(const Catalog& cat) {
  RunReport r;
  r.command = "catalog-list";
  r.meta.push_back({"records", std::to_string(cat.records().size())});
  for (const auto& [name, rf] : cat.records()) {
    ReportBlock b;
    b.kind = "real-form";
    b.fields.push_back({"name", name});
    b.fields.push_back({"family", family_str(rf.family)});
    b.fields.push_back({"dim_g", std::to_string(rf.dim_g)});
    b.fields.push_back({"dim_k", std::to_string(rf.dim_k)});
    b.fields.push_back({"d", std::to_string(d_value(rf))});
    b.fields.push_back({"real_rank", std::to_string(rf.real_rank)});
    b.fields.push_back({"is_split", rf.is_split ? "true" : "false"});
    b.fields.push_back({"is_compact", rf.is_compact ? "true" : "false"});
    if (rf.sigma) {
      std::ostringstream os;
      os << root_type_name(rf.sigma->type, rf.sigma->rank) << " mult";
      for (const auto& [ratio, m] : rf.sigma->mult_by_ratio)
        os << " " << ratio << ":" << m;
      b.fields.push_back({"sigma", os.str()});
    }
    r.blocks.push_back(std::move(b));
  }
  return r;
}

AuditOutcome audit_report(const Catalog& cat, const TableOne& table,
                          const std::vector<BigRootModel>& bigroots) {
  AuditOutcome out;
  RunReport& r = out.report;
  r.command = "audit-catalog";
  auto push = [&](const std::string& kind, const std::string& subject,
                  bool ok, const std::string& detail) {
    ReportBlock b;
    b.kind = kind;
    b.fields.push_back({"subject", subject});
    b.fields.push_back({"ok", ok ? "true" : "false"});
    if (!detail.empty()) b.fields.push_back({"detail", detail});
    if (!ok) out.all_ok = false;
    r.blocks.push_back(std::move(b));
  };

  for (const auto& line : cat.audit())
    push("record-audit", line.record + " [" + line.check + "]", line.ok,
         line.detail);

  for (const auto& row : table.rows())
    for (int n = 1; n <= 3; ++n) {
      TableInstance inst = table.instantiate(row.index, n);
      push("table-identity",
           "row " + std::to_string(row.index) + " n=" + std::to_string(n),
           inst.identity_holds(),
           std::to_string(inst.dg) + " = " + std::to_string(inst.dh) + " + " +
               std::to_string(inst.dl));
    }

  for (const auto& model : bigroots) {
    std::string why;
    bool ok = true;
    std::string detail;
    try {
      RestrictedSigma sig = restrict_model(model);
      const RealFormDescriptor& rf = cat.lookup(model.name);
      ok = restricted_classes_agree(sig.cls, sig.vectors, sig.mult,
                                    sig.real_rank, rf, &why);
      detail = why;
      if (ok) {
        // dim g = dim t + |Delta_m| + dim a + total multiplicity.
        long mult_total = 0;
        for (const auto& [v, mm] : sig.mult) mult_total += mm;
        long lhs = rf.dim_g;
        long rhs = model.t_dim + sig.delta_m_count + sig.real_rank + mult_total;
        if (lhs != rhs) {
          ok = false;
          detail = "dimension bookkeeping: dim_g " + std::to_string(lhs) +
                   " != " + std::to_string(rhs);
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    push("big-root-table", model.name, ok, detail);
  }

  for (const auto& name : audit_model_names()) {
    bool ok = true;
    std::string detail;
    try {
      MatrixModel mm = realize_by_name(name);
      OracleResult res = restricted_spectrum(mm);
      std::string why;
      ok = oracle_agrees_with_catalog(res, cat.lookup(name), &why);
      detail = why + "; sigma " + res.cls.name() + ", rank " +
               std::to_string(res.real_rank) + ", d " +
               std::to_string(res.dim_p);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    push("oracle-agreement", name, ok, detail);
  }
  r.meta.push_back({"all_ok", out.all_ok ? "true" : "false"});
  return out;
}

}  // namespace ckf
