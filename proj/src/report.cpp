#include "heegaard/report.hpp"

#include "heegaard/enumeration.hpp"

#include <sstream>
#include <stdexcept>

namespace heegaard {

using Index = Eigen::Index;
using Json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s + ")";
}

template <class T>
std::string join_numbers(const std::vector<T>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(std::to_string(x));
    return join(s);
}

std::string phase_text(const std::vector<std::optional<int>>& phase) {
    std::vector<std::string> s;
    for (const auto& e : phase) s.push_back(e ? std::to_string(*e) : "inf");
    return join(s);
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

}  // namespace

InvariantReport analyze(const LinkedGroup& g, const std::string& digest, std::uint64_t seed) {
    InvariantReport r;
    r.digest = digest;
    r.free_rank = static_cast<long>(g.free_rank);
    for (const auto& t : g.torsion) r.torsion.push_back(t.get_str());
    for (Index i = 0; i < g.t(); ++i) {
        std::vector<std::string> row;
        for (Index j = 0; j < g.t(); ++j) row.push_back(to_string(g.linking(i, j)));
        r.linking.push_back(std::move(row));
    }
    const StableInvariants inv = stable_invariants(g);
    for (const auto& o : inv.odd) {
        OddSection s;
        s.p = o.p.get_str();
        for (const auto& b : o.blocks) {
            for (Index k = 0; k < b.multiplicity; ++k) s.exponents.push_back(b.exponent);
            s.characters.push_back(b.character);
        }
        r.odd.push_back(std::move(s));
    }
    if (inv.two) {
        TwoSection s;
        s.exponents = inv.two->exponents;
        for (const auto& f : inv.two->wall.summands) s.summands.push_back(f.to_string());
        s.phase = inv.two->phase.entries;
        r.two = std::move(s);

        const auto parts = primary_decompose(g);
        const PrimaryComponent* two = find_component(parts, 2);
        if (two->order() <= BigInt(static_cast<unsigned long>(enumeration_limits().burger))) {
            if (!(phase_vector_from_gauss(*two) == inv.two->phase))
                throw std::logic_error("phase vector disagrees with the Gauss sum phases");
        } else {
            r.qualifiers.push_back("phase-cross-check-skipped");
        }
    }
    if (g.t() > 0) {
        const MinimalInvariant m = det_invariant(g, seed);
        r.parity = m.even ? "even" : "odd";
        r.tau_bar = m.tau_bar.get_str();
        r.det_value = m.det_value.get_str();
        r.class_count = class_count(m.tau, m.even).get_str();
    }
    return r;
}

InvariantReport analyze(const SymplecticMatrix& h, const std::string& digest, std::uint64_t seed) {
    const PartialNormalForm nf = partial_normal_form(h);
    InvariantReport r = analyze(linking_from_normal_form(nf), digest, seed);
    r.genus = static_cast<long>(h.genus());
    r.stab_index = static_cast<long>(nf.stab_index);
    if (nf.stab_index > 0 && r.det_value) r.qualifiers.push_back("det-value-not-a-splitting-invariant");
    for (const auto& s : reidemeister_symbols(nf)) r.reidemeister.push_back({static_cast<long>(s.i), s.p.get_str(), s.value.get_str(), s.character, s.determined});
    return r;
}

std::vector<std::string> invariant_differences(const InvariantReport& a, const InvariantReport& b) {
    std::vector<std::string> d;
    if (a.free_rank != b.free_rank)
        d.push_back("free_rank: " + std::to_string(a.free_rank) + " vs " + std::to_string(b.free_rank));
    if (a.torsion != b.torsion) d.push_back("torsion: " + join(a.torsion) + " vs " + join(b.torsion));
    if (a.odd != b.odd) d.push_back("odd characters differ");
    const auto phase = [](const InvariantReport& r) { return r.two ? phase_text(r.two->phase) : std::string("none"); };
    if (phase(a) != phase(b)) d.push_back("phase: " + phase(a) + " vs " + phase(b));
    const auto opt = [](const std::optional<std::string>& s) { return s.value_or("none"); };
    if (a.parity != b.parity) d.push_back("parity: " + opt(a.parity) + " vs " + opt(b.parity));
    if (a.tau_bar != b.tau_bar) d.push_back("tau_bar: " + opt(a.tau_bar) + " vs " + opt(b.tau_bar));
    if (a.det_value != b.det_value) d.push_back("det: " + opt(a.det_value) + " vs " + opt(b.det_value));
    return d;
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["digest"] = r.digest;
    j["genus"] = optional_json(r.genus);
    j["stab_index"] = optional_json(r.stab_index);
    j["free_rank"] = r.free_rank;
    j["torsion"] = r.torsion;
    j["linking"] = r.linking;
    j["odd"] = Json::array();
    for (const auto& o : r.odd) j["odd"].push_back({{"p", o.p}, {"exponents", o.exponents}, {"characters", o.characters}});
    if (r.two) {
        Json phase = Json::array();
        for (const auto& e : r.two->phase) phase.push_back(optional_json(e));
        j["two"] = {{"exponents", r.two->exponents}, {"summands", r.two->summands}, {"phase", phase}};
    } else {
        j["two"] = nullptr;
    }
    j["parity"] = optional_json(r.parity);
    j["tau_bar"] = optional_json(r.tau_bar);
    j["det_value"] = optional_json(r.det_value);
    j["class_count"] = optional_json(r.class_count);
    j["reidemeister"] = Json::array();
    for (const auto& s : r.reidemeister) j["reidemeister"].push_back(
            {{"i", s.i}, {"p", s.p}, {"value", s.value}, {"character", s.character}, {"determined", s.determined}});
    j["comparisons"] = Json::array();
    for (const auto& c : r.comparisons)
        j["comparisons"].push_back({{"mode", c.mode},
                                    {"other_digest", c.other_digest},
                                    {"equivalent", c.equivalent},
                                    {"reason", c.reason},
                                    {"differences", c.differences},
                                    {"qualifiers", c.qualifiers}});
    j["qualifiers"] = r.qualifiers;
    return j;
}

InvariantReport report_from_json(const Json& j) {
    InvariantReport r;
    r.digest = j.at("digest").get<std::string>();
    r.genus = optional_from<long>(j.at("genus"));
    r.stab_index = optional_from<long>(j.at("stab_index"));
    r.free_rank = j.at("free_rank").get<long>();
    r.torsion = j.at("torsion").get<std::vector<std::string>>();
    r.linking = j.at("linking").get<std::vector<std::vector<std::string>>>();
    for (const auto& o : j.at("odd"))
        r.odd.push_back({o.at("p").get<std::string>(), o.at("exponents").get<std::vector<unsigned long>>(),
                         o.at("characters").get<std::vector<int>>()});
    if (!j.at("two").is_null()) {
        const Json& t = j.at("two");
        TwoSection s;
        s.exponents = t.at("exponents").get<std::vector<unsigned long>>();
        s.summands = t.at("summands").get<std::vector<std::string>>();
        for (const auto& e : t.at("phase")) s.phase.push_back(optional_from<int>(e));
        r.two = std::move(s);
    }
    r.parity = optional_from<std::string>(j.at("parity"));
    r.tau_bar = optional_from<std::string>(j.at("tau_bar"));
    r.det_value = optional_from<std::string>(j.at("det_value"));
    r.class_count = optional_from<std::string>(j.at("class_count"));
    for (const auto& s : j.at("reidemeister"))
        r.reidemeister.push_back({s.at("i").get<long>(), s.at("p").get<std::string>(), s.at("value").get<std::string>(),
                                  s.at("character").get<int>(), s.at("determined").get<bool>()});
    for (const auto& c : j.at("comparisons"))
        r.comparisons.push_back({c.at("mode").get<std::string>(), c.at("other_digest").get<std::string>(),
                                 c.at("equivalent").get<bool>(), c.at("reason").get<std::string>(),
                                 c.at("differences").get<std::vector<std::string>>(),
                                 c.at("qualifiers").get<std::vector<std::string>>()});
    r.qualifiers = j.at("qualifiers").get<std::vector<std::string>>();
    return r;
}

std::string to_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "input      " << r.digest << "\n";
    if (r.genus) os << "genus      " << *r.genus << "\n";
    if (r.stab_index) os << "stab_index " << *r.stab_index << "\n";
    os << "free_rank  " << r.free_rank << "\n";
    os << "torsion    " << join(r.torsion) << "\n";
    if (!r.linking.empty()) {
        os << "linking\n";
        for (const auto& row : r.linking) {
            os << " ";
            for (const auto& e : row) os << " " << e;
            os << "\n";
        }
    }
    for (const auto& o : r.odd) {
        std::vector<std::string> chars;
        for (int c : o.characters) chars.push_back(c > 0 ? "+1" : "-1");
        os << "p = " << o.p << "  exponents " << join_numbers(o.exponents) << "  characters " << join(chars) << "\n";
    }
    if (r.two) {
        os << "p = 2  exponents " << join_numbers(r.two->exponents) << "  summands " << join(r.two->summands) << "\n";
        os << "       phase " << phase_text(r.two->phase) << "\n";
    }
    if (r.parity) {
        os << "parity     " << *r.parity << "\n";
        os << "tau_bar    " << *r.tau_bar << "\n";
        os << "det        " << *r.det_value << " mod " << *r.tau_bar << "\n";
        os << "classes    " << *r.class_count << "\n";
    }
    for (const auto& s : r.reidemeister)
        os << "eps(" << s.i << ", p=" << s.p << ") = " << s.value << "  character " << s.character
           << (s.determined ? "" : "  (not determined: p does not divide tau_i)") << "\n";
    for (const auto& c : r.comparisons) {
        os << "compare " << c.mode << " vs " << c.other_digest << ": " << (c.equivalent ? "equivalent" : "inequivalent");
        if (!c.reason.empty()) os << " (" << c.reason << ")";
        os << "\n";
        for (const auto& d : c.differences) os << "  diff " << d << "\n";
        for (const auto& q : c.qualifiers) os << "  qualifier " << q << "\n";
    }
    for (const auto& q : r.qualifiers) os << "qualifier  " << q << "\n";
    return os.str();
}

}  // namespace heegaard
