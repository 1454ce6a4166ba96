#include "lf/report.hpp"

#include <ostream>

#include "lf/config.hpp"

namespace lf {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void append_bessel(std::string& out, const char* key, const BesselBounds& b) {
    out += std::string("\"") + key + "\":{\"C\":" + format_double(b.lower) +
           ",\"D\":" + format_double(b.upper) + ",\"atoms\":" + std::to_string(b.atom_count) +
           "}";
}

}  // namespace

std::string serialize_report(const CheckReport& r, const std::string& canonical_config) {
    std::string out = "{\"config\":" + canonical_config;
    out += ",\"field\":{\"p\":" + std::to_string(r.p) + ",\"c\":" + std::to_string(r.c) +
           ",\"q\":" + std::to_string(r.q) + "}";
    out += ",\"grid\":{\"M\":" + std::to_string(r.M) + ",\"N\":" + std::to_string(r.N) + "}";
    out += ",\"ranges\":{\"J_max\":" + std::to_string(r.j_max) +
           ",\"K_max\":" + std::to_string(r.k_max) + "}";
    out += ",\"s\":" + format_double(r.s);
    out += ",\"tolerances\":{\"unitary\":" + format_double(r.tolerances.unitary) +
           ",\"identity\":" + format_double(r.tolerances.identity) + "}";
    out += ",\"seed\":" + std::to_string(r.seed);
    out += ",\"trials\":" + std::to_string(r.trials);
    out += ",\"omega_dilation_invariant\":" + std::string(bool_str(r.omega_invariant));

    out += ",\"bessel\":{";
    append_bessel(out, "primal", r.bessel_primal);
    out += ",";
    append_bessel(out, "dual", r.bessel_dual);
    out += ",\"pass\":" + std::string(bool_str(r.bessel_pass)) + "}";

    out += ",\"t_check\":{\"per_k\":[";
    for (size_t i = 0; i < r.tk_stats.size(); ++i) {
        const TkStat& st = r.tk_stats[i];
        if (i) out += ",";
        out += "{\"k\":" + std::to_string(st.k) +
               ",\"max_dev\":" + format_double(st.max_deviation) +
               ",\"uncheckable\":" + std::to_string(st.uncheckable) + "}";
    }
    out += "],\"max_dev\":" + format_double(r.tk_max_deviation) +
           ",\"uncheckable_total\":" + std::to_string(r.tk_uncheckable_total) +
           ",\"restricted\":" + std::string(bool_str(r.restricted)) +
           ",\"pass\":" + std::string(bool_str(r.tk_pass)) + "}";

    out += ",\"lemma31\":{\"primal_max_rel_dev\":" + format_double(r.lemma31_primal_max) +
           ",\"dual_max_rel_dev\":" + format_double(r.lemma31_dual_max) +
           ",\"pass\":" + std::string(bool_str(r.lemma31_pass)) + "}";
    out += ",\"lemma32\":{\"max_dev\":" + format_double(r.lemma32_max) +
           ",\"pass\":" + std::string(bool_str(r.lemma32_pass)) + "}";
    out += ",\"reconstruction\":{\"max_dev\":" + format_double(r.reconstruction_max) +
           ",\"trials\":" + std::to_string(r.trials) +
           ",\"pass\":" + std::string(bool_str(r.reconstruction_pass)) + "}";
    out += ",\"overall\":\"" + json_escape(r.verdict) + "\"}";
    return out;
}

void print_report_summary(std::ostream& os, const CheckReport& r) {
    os << "field GF(" << r.q << ")  grid M=" << r.M << " N=" << r.N << "  J_max=" << r.j_max
       << " K_max=" << r.k_max << "  s=" << r.s << "\n";
    os << "  bessel    primal C=" << r.bessel_primal.lower << " D=" << r.bessel_primal.upper
       << " (" << r.bessel_primal.atom_count << " atoms), dual C=" << r.bessel_dual.lower
       << " D=" << r.bessel_dual.upper << "  [" << (r.bessel_pass ? "pass" : "FAIL") << "]\n";
    os << "  t_k       max |t_k - delta| = " << r.tk_max_deviation;
    if (r.tk_uncheckable_total > 0)
        os << " (" << r.tk_uncheckable_total << " uncheckable cells)";
    os << "  [" << (r.tk_pass ? "pass" : "FAIL") << "]\n";
    os << "  lemma 3.1 max rel dev = " << std::max(r.lemma31_primal_max, r.lemma31_dual_max)
       << "  [" << (r.lemma31_pass ? "pass" : "FAIL") << "]\n";
    os << "  lemma 3.2 max dev = " << r.lemma32_max << "  ["
       << (r.lemma32_pass ? "pass" : "FAIL") << "]\n";
    os << "  reconstr. max dev = " << r.reconstruction_max << " over " << r.trials
       << " pairs  [" << (r.reconstruction_pass ? "pass" : "FAIL") << "]\n";
    os << "overall: " << r.verdict << "\n";
}

std::string serialize_harness_summary(const HarnessSummary& s) {
    std::string out = "{\"cases\":[";
    for (size_t i = 0; i < s.cases.size(); ++i) {
        const HarnessCaseResult& c = s.cases[i];
        if (i) out += ",";
        out += "{\"name\":\"" + json_escape(c.name) + "\"";
        out += ",\"tk_pass\":" + std::string(bool_str(c.tk_pass));
        out += ",\"reconstruction_pass\":" + std::string(bool_str(c.reconstruction_pass));
        out += ",\"agree\":" + std::string(bool_str(c.agree));
        out += ",\"tk_max_dev\":" + format_double(c.tk_max_deviation);
        out += ",\"reconstruction_max_dev\":" + format_double(c.reconstruction_max);
        if (!c.counterexample.empty()) out += ",\"counterexample\":" + c.counterexample;
        out += "}";
    }
    out += "],\"agreements\":" + std::to_string(s.agreements) +
           ",\"all_agree\":" + std::string(bool_str(s.all_agree)) + "}";
    return out;
}

void print_harness_summary(std::ostream& os, const HarnessSummary& s) {
    for (const HarnessCaseResult& c : s.cases) {
        os << "  " << c.name << ": t_k " << (c.tk_pass ? "pass" : "fail") << " (dev "
           << c.tk_max_deviation << "), reconstruction "
           << (c.reconstruction_pass ? "pass" : "fail") << " (dev " << c.reconstruction_max
           << ") -> " << (c.agree ? "agree" : "DISAGREE") << "\n";
    }
    os << s.agreements << "/" << s.cases.size() << " verdict agreements\n";
}

}  // namespace lf
