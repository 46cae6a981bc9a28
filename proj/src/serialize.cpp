#include "sextic/serialize.hpp"

namespace sextic {

ordered_json json_u64(u64 v) {
    if (v > json_exact_max) return std::to_string(v);
    return v;
}

const char* outcome_name(Outcome outcome) {
    return outcome == Outcome::prime ? "prime" : "composite";
}

const char* engine_name(Engine engine) {
    return engine == Engine::sound ? "sound" : "paper-literal";
}

const char* algorithm_name(SieveAlgorithm algo) {
    return algo == SieveAlgorithm::wheel6 ? "wheel6" : "eratosthenes";
}

ordered_json witness_json(const ExclusionWitness& w) {
    ordered_json j;
    j["i"] = json_u64(w.i);
    j["a"] = json_u64(w.a);
    j["residue"] = json_u64(w.residue);
    j["divisor"] = json_u64(w.divisor);
    j["cofactor"] = json_u64(w.cofactor);
    return j;
}

ordered_json verdict_json(const Verdict& v, std::optional<Outcome> oracle) {
    ordered_json j;
    j["m"] = json_u64(v.params.m);
    j["N"] = json_u64(v.params.N);
    j["P"] = json_u64(v.P);
    j["engine"] = engine_name(v.engine);
    j["extension"] = v.params.even_extension();
    j["verdict"] = outcome_name(v.outcome);
    j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
    j["bound"] = json_u64(v.i_bound_used);
    j["checks"] = json_u64(v.checks_performed);
    if (oracle) {
        j["oracle"] = outcome_name(*oracle);
        j["agree"] = *oracle == v.outcome;
    }
    return j;
}

ordered_json disagreement_json(const Disagreement& d) {
    ordered_json j;
    j["m"] = json_u64(d.m);
    j["N"] = json_u64(d.N);
    j["P"] = json_u64(d.P);
    j["engine"] = engine_name(d.engine);
    j["verdict"] = outcome_name(d.engine_outcome);
    j["oracle"] = outcome_name(d.oracle_outcome);
    j["witness"] = d.verdict.witness ? witness_json(*d.verdict.witness) : ordered_json(nullptr);
    j["bound"] = json_u64(d.verdict.i_bound_used);
    j["checks"] = json_u64(d.verdict.checks_performed);
    return j;
}

ordered_json excluded_entry_json(u64 m, const ExcludedEntry& entry) {
    ordered_json j;
    j["m"] = json_u64(m);
    j["N"] = json_u64(entry.N);
    j["P"] = json_u64(u64(entry.witness.divisor * entry.witness.cofactor));
    j["witness"] = witness_json(entry.witness);
    return j;
}

ordered_json family_json(const LinearFamily& fam, u64 member_count) {
    ordered_json j;
    j["q"] = json_u64(fam.offset);
    j["slope"] = json_u64(fam.slope);
    j["intercept"] = json_u64(fam.intercept);
    ordered_json members = ordered_json::array();
    for (u64 p = 0; p < member_count; ++p) members.push_back(json_u64(fam.member(p)));
    j["members"] = members;
    return j;
}

std::string stats_csv_row(const SieveStats& stats, SieveRange range) {
    std::string row = algorithm_name(stats.algorithm);
    row += ',';
    row += std::to_string(range.lo);
    row += ',';
    row += std::to_string(range.hi);
    row += ',';
    row += std::to_string(stats.candidates_considered);
    row += ',';
    row += std::to_string(stats.mark_operations);
    row += ',';
    row += std::to_string(stats.primes_found);
    return row;
}

} // namespace sextic
