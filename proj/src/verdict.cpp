#include "ckf/verdict.hpp"

#include <algorithm>
#include <sstream>

namespace ckf {

std::string embedding_kind_str(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::table_one_identified: return "table_one_identified";
    case EmbeddingKind::centralizer_witness: return "centralizer_witness";
    case EmbeddingKind::split_ambient_generic: return "split_ambient_generic";
    case EmbeddingKind::declared_regular_proper: return "declared_regular_proper";
    case EmbeddingKind::unspecified: return "unspecified";
  }
  return "?";
}

std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::AdmitsStandard: return "AdmitsStandard";
    case Outcome::NoStandard: return "NoStandard";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

DimCheck dimension_condition(const RealFormDescriptor& g, const GroupDesc& h,
                             const GroupDesc& l) {
  DimCheck c;
  c.dg = d_value(g);
  c.dh = h.d();
  c.dl = l.d();
  c.holds = c.dg == c.dh + c.dl;
  return c;
}

RRegularCheck r_regular_check(const RealFormDescriptor& g, const GroupDesc& h,
                              const EmbeddingDescriptor& emb) {
  RRegularCheck out;
  if (h.real_rank() >= g.real_rank)
    throw input_error("R-regular claim: real rank of h (" +
                      std::to_string(h.real_rank()) +
                      ") does not drop below real rank of g (" +
                      std::to_string(g.real_rank) + ")");
  if (emb.kind == EmbeddingKind::declared_regular_proper) {
    if (h.dim() >= g.dim_g)
      throw input_error("R-regular claim: h is not a proper subalgebra");
    if (h.d() > d_value(g))
      throw input_error("R-regular claim: d(h) exceeds d(g)");
    out.ok = true;
    out.rank_deficit = g.real_rank - h.real_rank();
    out.d_centralizer = d_value(g);
    out.detail = "declared by input; representable checks only";
    return out;
  }
  if (emb.kind != EmbeddingKind::centralizer_witness)
    throw input_error("R-regular check requires a witness or a declaration");
  if (!emb.witness) throw input_error("centralizer witness vector is missing");
  const QVec& a = *emb.witness;
  if (vzero(a)) throw input_error("centralizer witness must be nonzero");
  if (static_cast<int>(a.size()) != g.real_rank)
    throw input_error("witness dimension " + std::to_string(a.size()) +
                      " does not match the real rank " +
                      std::to_string(g.real_rank) + " of " + g.name);

  SigmaRealization sr = sigma_witness_realization(g);
  std::vector<QVec> vanishing;
  long mult_sum = 0;
  for (const auto& root : sr.roots) {
    if (!dot(root, a).is_zero()) continue;
    vanishing.push_back(root);
    if (lex_sign(root) > 0) mult_sum += sr.mult.at(root);
  }
  out.rank_deficit = g.real_rank - span_rank(vanishing);
  // d of the centralizer z(A) = m_0 + a + (vanishing root spaces): its
  // noncompact dimension is dim a plus the vanishing positive multiplicities.
  out.d_centralizer = g.real_rank + mult_sum;
  if (out.rank_deficit < 1)
    throw input_error("witness does not cut the restricted system down");
  if (h.d() > out.d_centralizer)
    throw input_error(
        "dimensional impossibility: d(h) = " + std::to_string(h.d()) +
        " exceeds the centralizer bound " + std::to_string(out.d_centralizer));
  out.ok = true;
  out.detail = "witness " + vec_str(a) + " annihilates " +
               std::to_string(vanishing.size()) + " restricted roots";
  return out;
}

namespace {

// Corollary 5 membership, encoded from the stated lists.
bool cor5_claims(const RealFormDescriptor& g) {
  switch (g.family) {
    case Family::sl_R: return g.p > 1;
    case Family::sp_R: return g.p > 1;
    case Family::so_pq:
      if (g.q == g.p) return g.p == 3 || g.p == 5 || g.p == 7 || g.p > 9;
      if (g.q == g.p + 1) return g.p == 2 || g.p > 3;
      return false;
    default: return false;
  }
}

// Chain-corollary scope for a proper regular su/so/sp descent, if the pair
// (g, h) has the corollary's shape.
std::string chain_corollary(const RealFormDescriptor& g, const GroupDesc& h) {
  const RealFormDescriptor* hf = h.noncompact_factor();
  if (!hf || h.factors.size() != 1) return "";
  if (g.family != hf->family) return "";
  if (hf->p != g.p - 1 || hf->q != g.q - 1) return "";
  int n = g.p, m = g.q;
  if (g.family == Family::su_pq && m >= n && n > 2) return "Corollary 6";
  if (g.family == Family::so_pq && m + 1 > n && n > 8) return "Corollary 7";
  if (g.family == Family::sp_pq && m >= n && n > 1) return "Corollary 8";
  return "";
}

std::string d_summary(const TripleSpec& spec) {
  std::ostringstream os;
  os << "d(g)=" << d_value(spec.g);
  if (!spec.h.generic_noncompact) os << " d(h)=" << spec.h.desc.d();
  if (spec.l) os << " d(l)=" << spec.l->desc.d();
  return os.str();
}

}  // namespace

Verdict classify(const TripleSpec& spec, const Catalog& cat,
                 const TableOne& table) {
  Verdict v;
  const RealFormDescriptor& g = spec.g;

  // Spec-level consistency first: these are input errors, not verdicts.
  if (!spec.h.generic_noncompact) {
    if (spec.h.desc.d() > d_value(g))
      throw input_error("spec rejects itself: d(h) = " +
                        std::to_string(spec.h.desc.d()) + " exceeds d(g) = " +
                        std::to_string(d_value(g)));
  } else if (g.is_compact) {
    throw input_error("a compact g has no noncompact subalgebras");
  }

  // R0: compact h. L = G acts properly and co-compactly on G/H.
  if (!spec.h.generic_noncompact && spec.h.desc.is_compact()) {
    v.outcome = Outcome::AdmitsStandard;
    v.trace.push_back({"R0-compact-h",
                       "Definition 1 (standard form with L = G); Corollaries 5-8 compact case",
                       d_summary(spec)});
    return v;
  }

  // R1: identified Onishchik-table triple.
  if (spec.h.emb.kind == EmbeddingKind::table_one_identified) {
    if (spec.h.generic_noncompact)
      throw input_error("table identification requires a named h");
    int row = spec.h.emb.table_row, n = spec.h.emb.table_n;
    TableInstance inst = table.instantiate(row, n);  // throws if row/n bad
    auto mismatch = [&](const std::string& what, const std::string& want,
                        const std::string& got) {
      throw input_error("table identification inconsistent: " + what +
                        " of row " + std::to_string(row) + " at n = " +
                        std::to_string(n) + " is " + want + ", spec has " +
                        got);
    };
    if (inst.g != g.name) mismatch("g", inst.g, g.name);
    auto sorted_name = [](std::string s) {
      std::vector<std::string> parts;
      std::istringstream is(s);
      std::string part;
      while (std::getline(is, part, 'x')) parts.push_back(part);
      std::sort(parts.begin(), parts.end());
      std::string out;
      for (size_t i = 0; i < parts.size(); ++i)
        out += (i ? "x" : "") + parts[i];
      return out;
    };
    if (sorted_name(inst.h) != sorted_name(spec.h.desc.name))
      mismatch("h", inst.h, spec.h.desc.name);
    if (spec.l && sorted_name(inst.l) != sorted_name(spec.l->desc.name))
      mismatch("l", inst.l, spec.l->desc.name);
    std::ostringstream os;
    os << "n=" << n << " " << inst.dg << "=" << inst.dh << "+" << inst.dl;
    const TableOneRow& r = table.row(row);
    std::string cite = "Theorem 1, Table 1 row " + std::to_string(row);
    if (r.duplicate_of)
      cite += " (verbatim duplicate of row " + std::to_string(r.duplicate_of) + ")";
    v.outcome = Outcome::AdmitsStandard;
    v.trace.push_back({"R1-table-one", cite, os.str()});
    return v;
  }

  // R2: split ambient algebra not matched by the table.
  if (g.is_split) {
    bool matched = spec.h.generic_noncompact
                       ? table.match_g(g).has_value()
                       : table.match_pair(g, spec.h.desc).has_value();
    if (!matched) {
      std::string cite = "Theorem 5";
      if (cor5_claims(g)) cite += "; Corollary 5";
      v.outcome = Outcome::NoStandard;
      v.trace.push_back(
          {"R2-split", cite,
           g.name + " is split; no Onishchik-table pair matches. " +
               d_summary(spec)});
      return v;
    }
  }

  // R3: proper real R-regular subalgebra.
  if (spec.h.emb.kind == EmbeddingKind::centralizer_witness ||
      spec.h.emb.kind == EmbeddingKind::declared_regular_proper) {
    if (spec.h.generic_noncompact)
      throw input_error("an R-regular claim requires a named h");
    RRegularCheck rc = r_regular_check(g, spec.h.desc, spec.h.emb);
    if (rc.ok) {
      std::string cite = "Theorem 4";
      std::string chain = chain_corollary(g, spec.h.desc);
      if (!chain.empty()) cite += "; " + chain;
      std::ostringstream os;
      os << rc.detail << "; rank deficit " << rc.rank_deficit
         << ", centralizer d bound " << rc.d_centralizer << "; "
         << d_summary(spec);
      v.outcome = Outcome::NoStandard;
      v.trace.push_back({"R3-r-regular", cite, os.str()});
      return v;
    }
  }

  // R4: the dimension identity, in triple mode only.
  if (spec.l && !spec.h.generic_noncompact) {
    DimCheck dc = dimension_condition(g, spec.h.desc, spec.l->desc);
    std::ostringstream os;
    os << "d(g)=" << dc.dg << " d(h)=" << dc.dh << " d(l)=" << dc.dl;
    if (!dc.holds) {
      v.outcome = Outcome::NoStandard;
      v.trace.push_back({"R4-dimension",
                         "Theorem 3 (the identity d(g) = d(h) + d(l))",
                         os.str() + "; fails for this triple"});
      return v;
    }
    v.trace.push_back({"note-dimension-holds",
                       "Theorem 3 (the identity d(g) = d(h) + d(l))",
                       os.str() + "; necessary, not sufficient"});
  }

  v.outcome = Outcome::Unknown;
  v.trace.push_back({"no-rule", "none",
                     "no implemented criterion decides this spec"});
  return v;
}

SweepFamily sweep_family_from_str(const std::string& s) {
  if (s == "split-families") return SweepFamily::split_families;
  if (s == "su-chain") return SweepFamily::su_chain;
  if (s == "so-chain") return SweepFamily::so_chain;
  if (s == "sp-chain") return SweepFamily::sp_chain;
  throw input_error("unknown sweep family '" + s + "'");
}

std::string sweep_family_str(SweepFamily f) {
  switch (f) {
    case SweepFamily::split_families: return "split-families";
    case SweepFamily::su_chain: return "su-chain";
    case SweepFamily::so_chain: return "so-chain";
    case SweepFamily::sp_chain: return "sp-chain";
  }
  return "?";
}

namespace {

void sweep_split_family(Family fam, bool nn1, int max_param,
                        const TableOne& table, SweepReport& rep) {
  int lo = fam == Family::so_pq && !nn1 ? 3 : 2;
  for (int n = lo; n <= max_param; ++n) {
    RealFormDescriptor g;
    if (fam == Family::so_pq)
      g = formula_descriptor(fam, n, nn1 ? n + 1 : n);
    else
      g = formula_descriptor(fam, n, 0);
    SweepEntry e;
    e.g_name = g.name;
    e.h_name = "any noncompact reductive h";
    e.engine_no_standard = g.is_split && !table.match_g(g).has_value();
    e.corollary_claims = cor5_claims(g);
    e.status = e.engine_no_standard == e.corollary_claims ? "match"
                                                          : "divergence";
    if (e.status == "divergence") ++rep.divergences;
    rep.entries.push_back(std::move(e));
  }
}

void sweep_chain(Family fam, int max_param, const Catalog& cat,
                 SweepReport& rep) {
  for (int n = 2; n <= max_param; ++n)
    for (int m = n; m <= max_param; ++m) {
      RealFormDescriptor g;
      GroupDesc h;
      std::string head = fam == Family::su_pq ? "su"
                         : fam == Family::so_pq ? "so"
                                                : "sp";
      try {
        g = formula_descriptor(fam, n, m);
        h = cat.lookup_group(head + "(" + std::to_string(n - 1) + "," +
                             std::to_string(m - 1) + ")");
      } catch (const input_error&) {
        continue;  // degenerate h such as so(1,1); outside the sweep
      }
      SweepEntry e;
      e.g_name = g.name;
      e.h_name = h.name;
      EmbeddingDescriptor emb;
      emb.kind = EmbeddingKind::centralizer_witness;
      QVec a(static_cast<size_t>(g.real_rank));
      a.back() = Rat(1);
      emb.witness = a;
      try {
        e.engine_no_standard = r_regular_check(g, h, emb).ok;
      } catch (const input_error&) {
        e.engine_no_standard = false;
      }
      if (fam == Family::su_pq) e.in_corollary_scope = m >= n && n > 2;
      if (fam == Family::so_pq) e.in_corollary_scope = m + 1 > n && n > 8;
      if (fam == Family::sp_pq) e.in_corollary_scope = m >= n && n > 1;
      e.corollary_claims = e.in_corollary_scope;
      if (e.in_corollary_scope) {
        e.status = e.engine_no_standard ? "match" : "divergence";
        if (e.status == "divergence") ++rep.divergences;
      } else {
        e.status = e.engine_no_standard ? "engine-extra" : "outside-scope";
      }
      rep.entries.push_back(std::move(e));
    }
}

}  // namespace

SweepReport corollary_sweep(SweepFamily family, int max_param,
                            const Catalog& cat, const TableOne& table) {
  if (max_param < 2)
    throw precondition_error("corollary_sweep: max_param >= 2");
  SweepReport rep;
  rep.family = family;
  rep.max_param = max_param;
  switch (family) {
    case SweepFamily::split_families:
      sweep_split_family(Family::sl_R, false, max_param, table, rep);
      sweep_split_family(Family::so_pq, false, max_param, table, rep);
      sweep_split_family(Family::so_pq, true, max_param, table, rep);
      sweep_split_family(Family::sp_R, false, max_param, table, rep);
      break;
    case SweepFamily::su_chain:
      sweep_chain(Family::su_pq, max_param, cat, rep);
      break;
    case SweepFamily::so_chain:
      sweep_chain(Family::so_pq, max_param, cat, rep);
      break;
    case SweepFamily::sp_chain:
      sweep_chain(Family::sp_pq, max_param, cat, rep);
      break;
  }
  return rep;
}

}  // namespace ckf
