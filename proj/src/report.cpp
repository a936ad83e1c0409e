#include "loopchar/report.hpp"

#include <json.hpp>
#include <sstream>

namespace loopchar {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered cell_json(const CellVerdict& c, bool with_timings) {
    ordered j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["computed"] = c.computed;
    j["formula"] = c.formula;
    j["pass"] = c.pass;
    j["mode"] = c.mode;
    if (with_timings) j["ms"] = c.millis;
    return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& rep, bool with_timings) {
    ordered j;
    j["kind"] = rep.kind;
    j["cartan"] = rep.cartan;
    if (!rep.r.empty()) j["r"] = rep.r;
    ordered w;
    w["max_n"] = rep.n_max;
    w["max_d"] = rep.d_max;
    j["window"] = w;
    j["mode"] = rep.mode;
    j["all_pass"] = rep.all_pass;
    if (!rep.note.empty()) j["note"] = rep.note;
    j["cells"] = ordered::array();
    for (const auto& c : rep.cells) j["cells"].push_back(cell_json(c, with_timings));
    return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "n,d,computed,formula,pass,mode\n";
    for (const auto& c : rep.cells) {
        os << "\"" << degvec_to_string(c.n) << "\"," << c.d << "," << c.computed << ","
           << c.formula << "," << (c.pass ? "true" : "false") << "," << c.mode << "\n";
    }
    return os.str();
}

std::string roots_to_json(const RootSystem& rs) {
    ordered arr = ordered::array();
    for (const auto& root : rs.positive_roots) {
        ordered j;
        j["n"] = root;
        j["value"] = 1;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string atable_to_json(const ACoefficientTable& at) {
    ordered arr = ordered::array();
    for (const auto& [n, a] : at.entries) {
        ordered j;
        j["n"] = n;
        j["value"] = a;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

template <class K>
std::string basis_to_json(const SubspaceBasis<K>& b) {
    ordered j;
    j["sign"] = sign_name(b.sign);
    j["n"] = b.n;
    j["d"] = b.d;
    j["dim"] = b.dim();
    j["provenance"] = b.provenance;
    j["orbits"] = ordered::array();
    for (const auto& o : b.orbits) j["orbits"].push_back(o.to_string());
    return j.dump(2) + "\n";
}

template std::string basis_to_json<Qq>(const SubspaceBasis<Qq>&);
template std::string basis_to_json<Fp>(const SubspaceBasis<Fp>&);

namespace {

template <class K, class EntryFn>
ordered gram_json_core(const GramComputation<K>& g, EntryFn entry) {
    ordered j;
    j["n"] = g.n;
    j["d"] = g.d;
    if (!g.shift_r.empty()) j["r"] = g.shift_r;
    j["rank"] = g.rank;
    j["rows"] = ordered::array();
    for (const auto& w : g.words) j["rows"].push_back(w.to_string());
    j["cols"] = ordered::array();
    for (const auto& o : g.basis.orbits) j["cols"].push_back(o.to_string());
    j["col_dim"] = g.basis.dim();
    if (g.matrix.rows() > 0) {
        ordered entries = ordered::array();
        for (size_t r = 0; r < g.matrix.rows(); ++r) {
            ordered row = ordered::array();
            for (size_t c = 0; c < g.matrix.cols(); ++c) row.push_back(entry(g.matrix.at(r, c)));
            entries.push_back(row);
        }
        j["entries"] = entries;
    }
    return j;
}

}  // namespace

std::string gram_to_json(const GramComputation<Qq>& g) {
    ordered j = gram_json_core(g, [](const Qq& v) { return v.to_string(); });
    j["scalar"] = "Q(q)";
    return j.dump(2) + "\n";
}

std::string gram_to_json(const GramComputation<Fp>& g, std::uint64_t prime, std::uint64_t q_value,
                         std::uint64_t seed) {
    ordered j = gram_json_core(g, [](const Fp& v) { return v.value(); });
    j["scalar"] = "F_p";
    j["prime"] = prime;
    j["q_value"] = q_value;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

}  // namespace loopchar
