#include "chainmin/run_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chainmin/lattices.hpp"

namespace chainmin {

using json = nlohmann::ordered_json;

namespace {

int parse_int(const std::string& s, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Rat parse_rat(const std::string& s) {
  std::vector<std::string> parts = split(s, '/');
  if (parts.empty() || parts.size() > 2 || parts[0].empty())
    throw std::invalid_argument("bad rational: '" + s + "'");
  Count num(parts[0]);
  Count den = parts.size() == 2 ? Count(parts[1]) : Count(1);
  if (den == 0) throw std::invalid_argument("bad rational: '" + s + "'");
  return Rat(num, den);
}

json rat_array(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_string(r));
  return a;
}

json count_array(const std::vector<Count>& v) {
  json a = json::array();
  for (const Count& c : v) a.push_back(c.str());
  return a;
}

json dist_json(const RankDistribution& d) { return rat_array(d.p); }

}  // namespace

PosetSpec PosetSpec::parse(const std::string& text) {
  PosetSpec spec;
  if (!text.empty() && text.front() == '{') {
    json j = json::parse(text, nullptr, true);
    std::string type = j.at("type").get<std::string>();
    if (type == "boolean") {
      spec.kind = Kind::Boolean;
      spec.n = j.at("n").get<int>();
    } else if (type == "subspace") {
      spec.kind = Kind::Subspace;
      spec.q = j.at("q").get<int>();
      spec.n = j.at("n").get<int>();
    } else {
      throw std::invalid_argument("unknown poset type '" + type + "'");
    }
  } else {
    std::vector<std::string> head = split(text, ':');
    if (head.size() != 2)
      throw std::invalid_argument("poset descriptor needs 'kind:args', got '" +
                                  text + "'");
    if (head[0] == "boolean") {
      spec.kind = Kind::Boolean;
      spec.n = parse_int(head[1], "dimension");
    } else if (head[0] == "subspace") {
      std::vector<std::string> qn = split(head[1], ',');
      if (qn.size() != 2)
        throw std::invalid_argument("subspace descriptor needs 'subspace:Q,N'");
      spec.kind = Kind::Subspace;
      spec.q = parse_int(qn[0], "field size");
      spec.n = parse_int(qn[1], "dimension");
    } else {
      throw std::invalid_argument("unknown poset kind '" + head[0] + "'");
    }
  }
  if (spec.n < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (spec.kind == Kind::Subspace && spec.q < 2)
    throw std::invalid_argument("field size must be at least 2");
  return spec;
}

std::string PosetSpec::descriptor() const {
  if (kind == Kind::Boolean) return "boolean:" + std::to_string(n);
  return "subspace:" + std::to_string(q) + "," + std::to_string(n);
}

GradedPoset build_poset(const PosetSpec& spec) {
  if (spec.kind == PosetSpec::Kind::Boolean) return make_boolean_lattice(spec.n);
  return make_subspace_lattice(spec.q, spec.n);
}

LevelProfile build_profile(const PosetSpec& spec) {
  if (spec.kind == PosetSpec::Kind::Boolean) return boolean_profile(spec.n);
  return subspace_profile(spec.q, spec.n);
}

RankDistribution parse_start_distribution(const std::string& text,
                                          const LevelProfile& prof) {
  if (text.rfind("levels:", 0) == 0) {
    std::vector<int> levels = parse_int_list(text.substr(7));
    return RankDistribution::from_rank_set(prof, RankSet(levels));
  }
  std::string body;
  if (text.rfind("file:", 0) == 0) {
    std::ifstream in(text.substr(5));
    if (!in) throw std::invalid_argument("cannot read '" + text.substr(5) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  } else if (!text.empty() && text.front() == '{') {
    body = text;
  } else {
    throw std::invalid_argument(
        "start distribution must be 'levels:...', 'file:...', or JSON");
  }
  json j = json::parse(body, nullptr, true);
  if (j.contains("counts")) {
    std::vector<Count> counts;
    for (const auto& c : j.at("counts"))
      counts.push_back(c.is_string() ? Count(c.get<std::string>())
                                     : Count(c.get<long long>()));
    return RankDistribution::from_counts(prof.sizes, counts);
  }
  if (j.contains("p")) {
    RankDistribution d;
    d.sizes = prof.sizes;
    for (const auto& s : j.at("p")) d.p.push_back(parse_rat(s.get<std::string>()));
    d.validate();
    if (d.p.size() != prof.sizes.size())
      throw std::invalid_argument("distribution rank count mismatch");
    return d;
  }
  throw std::invalid_argument("start distribution JSON needs 'counts' or 'p'");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split(text, ','))
    out.push_back(parse_int(part, "list entry"));
  return out;
}

std::string profile_json(const PosetSpec& spec, const LevelProfile& prof,
                         const DescentReport& descent, bool checks_ok,
                         const std::string& note) {
  json j;
  j["poset"] = spec.descriptor();
  j["n"] = prof.n;
  j["sizes"] = count_array(prof.sizes);
  j["total"] = prof.total_size().str();
  switch (descent.kind) {
    case Descent::StrictlyDescending: j["descent"] = "strictly_descending"; break;
    case Descent::Descending: j["descent"] = "descending"; break;
    case Descent::Neither: j["descent"] = "not_descending"; break;
  }
  json c2 = json::array();
  for (int i = 0; i <= prof.n; ++i) {
    json row = json::array();
    for (int jx = 0; jx <= prof.n; ++jx)
      row.push_back(i == jx ? std::string() : prof.c2_at(i, jx).str());
    c2.push_back(row);
  }
  j["pair_counts"] = c2;
  j["pass"] = checks_ok;
  if (!note.empty()) j["note"] = note;
  return j.dump(2) + "\n";
}

std::string mk_table_csv(const MkTable& t) {
  std::ostringstream os;
  os << "a,m,delta,breakpoint\n";
  std::vector<bool> is_break(t.m.size(), false);
  for (const Count& b : t.breaks) {
    std::size_t idx = to_index(b, "breakpoint");
    if (idx < is_break.size()) is_break[idx] = true;
  }
  for (std::size_t a = 0; a < t.m.size(); ++a) {
    Count delta = a == 0 ? Count(0) : t.m[a] - t.m[a - 1];
    os << a << "," << t.m[a].str() << "," << delta.str() << ","
       << (is_break[a] ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string mk_table_json(const std::string& poset, const MkTable& t,
                          const ConvexityReport& conv) {
  json j;
  j["poset"] = poset;
  j["k"] = t.k;
  j["n"] = t.n;
  j["m"] = count_array(t.m);
  j["breaks"] = count_array(t.breaks);
  j["delta_nondecreasing"] = conv.nondecreasing;
  j["strict_jumps_ok"] = conv.strict_jumps_ok;
  return j.dump(2) + "\n";
}

std::string suite_csv(const SuiteReport& rep) {
  std::ostringstream os;
  os << "k,a,minimum,m_k,minimizers,all_minimizers_centred,ok\n";
  for (const SuiteRow& r : rep.rows)
    os << r.k << "," << r.a << "," << r.minimum.str() << "," << r.mk.str()
       << "," << r.minimizer_count.str() << "," << (r.all_minimizers_centred ? 1 : 0)
       << "," << (r.row_ok ? 1 : 0) << "\n";
  return os.str();
}

std::string suite_json(const SuiteReport& rep) {
  json j;
  j["poset"] = rep.poset;
  j["pass"] = rep.pass;
  json rows = json::array();
  for (const SuiteRow& r : rep.rows) {
    json row;
    row["k"] = r.k;
    row["a"] = r.a;
    row["minimum"] = r.minimum.str();
    row["m_k"] = r.mk.str();
    row["minimizers"] = r.minimizer_count.str();
    row["all_minimizers_centred"] = r.all_minimizers_centred;
    row["ok"] = r.row_ok;
    rows.push_back(row);
  }
  j["rows"] = rows;
  json ces = json::array();
  for (const Counterexample& ce : rep.counterexamples)
    ces.push_back(json::parse(counterexample_json(ce)));
  j["counterexamples"] = ces;
  return j.dump(2) + "\n";
}

std::string counterexample_json(const Counterexample& ce) {
  json j;
  j["poset"] = ce.poset;
  j["k"] = ce.k;
  j["a"] = ce.a;
  j["expected"] = ce.expected.str();
  j["observed"] = ce.observed.str();
  j["family"] = ce.family;
  return j.dump(2) + "\n";
}

std::string trajectory_json(const std::string& poset, const Trajectory& traj) {
  json j;
  j["poset"] = poset;
  j["k"] = traj.k;
  json steps = json::array();
  for (const CompressionStep& st : traj.steps) {
    json s;
    s["input"] = dist_json(st.input);
    s["reversed"] = st.reversed;
    s["i"] = st.i;
    s["i_prime"] = st.i_prime;
    s["delta"] = rat_string(st.delta);
    s["delta_prime"] = rat_string(st.delta_prime);
    s["output"] = dist_json(st.output);
    steps.push_back(s);
  }
  j["steps"] = steps;
  j["endpoint"] = dist_json(traj.endpoint);
  json wk = json::array();
  for (const Rat& w : traj.wk_values) wk.push_back(rat_string(w));
  j["w_k"] = wk;
  j["h"] = count_array(traj.h_values);
  json strict = json::array();
  for (bool b : traj.wk_strict) strict.push_back(b);
  j["strict_decrease"] = strict;
  j["w_k_nonincreasing"] = traj.p1_ok;
  j["endpoint_form_ok"] = traj.endpoint_form_ok;
  j["endpoint_matches_minimum"] = traj.endpoint_matches_mk;
  j["endpoint_prefix_length"] = traj.endpoint_ell;
  j["endpoint_ordering"] = traj.endpoint_mu_plus ? "outward" : "inward";
  j["pass"] = traj.pass();
  if (!traj.witness.empty()) j["witness"] = traj.witness;
  return j.dump(2) + "\n";
}

std::string expectation_json(const std::string& poset, std::size_t a, int k,
                             const std::vector<int>& family,
                             const ExpectationReport& rep) {
  json j;
  j["poset"] = poset;
  j["k"] = k;
  j["a"] = a;
  j["family"] = family;
  j["maximal_chains"] = rep.chain_count.str();
  j["c_k"] = rep.ck_family.str();
  j["m_k"] = rep.mk_of_size.str();
  j["e_f"] = rat_string(rep.e_f);
  j["e_mk_term"] = rat_string(rep.e_mk_term);
  j["e_ck_term"] = rat_string(rep.e_ck_term);
  j["e_weighted_size"] = rat_string(rep.e_weighted_size);
  j["e_f_nonpositive"] = rep.e_f_nonpositive;
  j["subchain_identity"] = rep.identity_ck;
  j["size_identity"] = rep.identity_size;
  j["convexity_step"] = rep.jensen_ok;
  j["bound_holds"] = rep.conclusion_ok;
  j["pass"] = rep.pass();
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  return j.dump(2) + "\n";
}

std::string probe_json(const std::string& poset, std::uint64_t seed,
                       const SearchProbe& probe) {
  json j;
  j["poset"] = poset;
  j["k"] = probe.k;
  j["a"] = probe.a;
  j["strategy"] = probe.strategy == ProbeStrategy::Hill ? "hill" : "anneal";
  j["seed"] = seed;
  j["proposals"] = probe.proposals;
  j["accepted"] = probe.accepted;
  j["audits"] = probe.audits;
  j["best_count"] = probe.best_count.str();
  j["best_family"] = probe.best_family;
  j["below_reference"] = probe.below_reference;
  return j.dump(2) + "\n";
}

}  // namespace chainmin
