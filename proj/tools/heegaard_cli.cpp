// Command-line front end.  Exit codes: 0 ok or equivalent, 1 inequivalent,
// 2 parse error, 3 not symplectic, 4 size limit, 5 internal error.

#include "heegaard/enumeration.hpp"
#include "heegaard/io.hpp"
#include "heegaard/report.hpp"
#include "heegaard/selftest.hpp"
#include "heegaard/smith.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace heegaard;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInequivalent = 1, kParse = 2, kNotSymplectic = 3, kSizeLimit = 4, kInternal = 5 };

SymplecticMatrix as_splitting(const ParsedInput& in) {
    if (in.kind != ParsedInput::Kind::Splitting) throw ParseError("this command needs a splitting (genus + matrix)");
    return validate_symplectic(in.matrix);
}

LinkedGroup as_group(const ParsedInput& in) {
    if (in.kind == ParsedInput::Kind::Group) return in.group;
    return linking_from_normal_form(partial_normal_form(as_splitting(in)));
}

InvariantReport report_for(const ParsedInput& in, std::uint64_t seed) {
    if (in.kind == ParsedInput::Kind::Group) return analyze(in.group, in.digest, seed);
    return analyze(as_splitting(in), in.digest, seed);
}

const PrimaryComponent& two_part(const std::vector<PrimaryComponent>& parts) {
    const PrimaryComponent* c = find_component(parts, 2);
    if (!c) throw ParseError("input has no 2-torsion");
    return *c;
}

Json matrix_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

void emit(bool json, const Json& j, const std::string& text) {
    if (json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of symplectic Heegaard splittings and linked abelian groups"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--seed", seed, "Seed for randomized checks");

    std::string file_a, file_b;
    auto* analyze_cmd = app.add_subcommand("analyze", "Full invariant report");
    analyze_cmd->add_option("file", file_a)->required();

    bool stable = false, minimal = false;
    auto* compare_cmd = app.add_subcommand("compare", "Decide stable or minimal equivalence");
    compare_cmd->add_option("a", file_a)->required();
    compare_cmd->add_option("b", file_b)->required();
    auto* stable_flag = compare_cmd->add_flag("--stable", stable);
    auto* minimal_flag = compare_cmd->add_flag("--minimal", minimal);
    stable_flag->excludes(minimal_flag);

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix, or of P for a splitting");
    snf_cmd->add_option("file", file_a)->required();
    auto* normalize_cmd = app.add_subcommand("normalize", "Partial normal form of a splitting");
    normalize_cmd->add_option("file", file_a)->required();
    auto* phase_cmd = app.add_subcommand("phase", "Phase vector of the 2-primary linking");
    phase_cmd->add_option("file", file_a)->required();
    auto* wall_cmd = app.add_subcommand("wall", "Wall decomposition of the 2-primary linking");
    wall_cmd->add_option("file", file_a)->required();
    unsigned long k = 0;
    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum Gamma_k, enumerated and closed form");
    gauss_cmd->add_option("file", file_a)->required();
    gauss_cmd->add_option("--k", k, "Gauss sum index")->required();
    auto* count_cmd = app.add_subcommand("count-classes", "Number of minimal splittings with this quotient");
    count_cmd->add_option("file", file_a)->required();
    std::uint64_t max_size = 256;
    auto* selftest_cmd = app.add_subcommand("selftest", "Randomized oracle checks");
    selftest_cmd->add_option("--max-size", max_size, "Largest torsion order sampled");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*analyze_cmd) {
            const InvariantReport r = report_for(parse_input_file(file_a), seed);
            emit(json, to_json(r), to_text(r));
            return kOk;
        }
        if (*compare_cmd) {
            if (!stable && !minimal) throw ParseError("compare needs --stable or --minimal");
            const ParsedInput a = parse_input_file(file_a), b = parse_input_file(file_b);
            InvariantReport ra = report_for(a, seed);
            const InvariantReport rb = report_for(b, seed);
            ComparisonEntry c;
            c.mode = stable ? "stable" : "minimal";
            c.other_digest = b.digest;
            if (stable) {
                const StableVerdict v = stable_equivalence(as_group(a), as_group(b));
                c.equivalent = v.equivalent;
                c.reason = v.reason;
            } else {
                MinimalVerdict v;
                if (a.kind == ParsedInput::Kind::Splitting && b.kind == ParsedInput::Kind::Splitting)
                    v = minimal_equivalence(as_splitting(a), as_splitting(b));
                else
                    v = minimal_equivalence(as_group(a), as_group(b));
                c.equivalent = v.equivalent;
                c.reason = v.reason;
                if (v.bounded_search) c.qualifiers.push_back("bounded-search");
                if (v.fell_back_to_stable) c.qualifiers.push_back("fell-back-to-stable");
                if (v.det_h) c.qualifiers.push_back("witness det h = " + v.det_h->get_str());
            }
            c.differences = invariant_differences(ra, rb);
            ra.comparisons.push_back(c);
            emit(json, to_json(ra), to_text(ra));
            return c.equivalent ? kOk : kInequivalent;
        }
        if (*snf_cmd) {
            const ParsedInput in = parse_input_file(file_a);
            if (in.kind == ParsedInput::Kind::Group) throw ParseError("snf needs a matrix");
            const IntegerMatrix m = in.kind == ParsedInput::Kind::Splitting ? as_splitting(in).P() : in.matrix;
            const SmithForm s = smith_normal_form(m);
            Json j{{"diag", Json::array()}, {"U", matrix_json(s.U)}, {"V", matrix_json(s.V)}, {"D", matrix_json(s.D)}};
            std::string text = "diag";
            for (const auto& d : s.diag) {
                j["diag"].push_back(d.get_str());
                text += " " + d.get_str();
            }
            text += "\nU\n" + to_string(s.U) + "\nV\n" + to_string(s.V) + "\nD\n" + to_string(s.D) + "\n";
            emit(json, j, text);
            return kOk;
        }
        if (*normalize_cmd) {
            const PartialNormalForm nf = partial_normal_form(as_splitting(parse_input_file(file_a)));
            Json j{{"stab_index", nf.stab_index}, {"t", nf.t}, {"r", nf.r}, {"tau", Json::array()},
                   {"normalized", matrix_json(nf.normalized.matrix())}, {"left", matrix_json(nf.left)},
                   {"right", matrix_json(nf.right)}};
            std::string text = "stab_index " + std::to_string(nf.stab_index) + "\nt " + std::to_string(nf.t) + "\nr " +
                               std::to_string(nf.r) + "\ntau";
            for (const auto& t : nf.tau) {
                j["tau"].push_back(t.get_str());
                text += " " + t.get_str();
            }
            text += "\nnormalized\n" + to_string(nf.normalized.matrix()) + "\nleft\n" + to_string(nf.left) +
                    "\nright\n" + to_string(nf.right) + "\n";
            emit(json, j, text);
            return kOk;
        }
        if (*phase_cmd || *wall_cmd) {
            const auto parts = primary_decompose(as_group(parse_input_file(file_a)));
            const PrimaryComponent& c = two_part(parts);
            const WallDecomposition w = wall_decompose(c);
            Json j;
            std::string text;
            if (*wall_cmd) {
                j["summands"] = Json::array();
                text = "summands";
                for (const auto& f : w.summands) {
                    j["summands"].push_back(f.to_string());
                    text += " " + f.to_string();
                }
                j["witness"] = matrix_json(w.witness);
                text += "\nwitness (columns are the new basis)\n" + to_string(w.witness) + "\n";
            } else {
                const PhaseVector p = phase_vector(w.summands, c.exponents.back());
                Json entries = Json::array();
                for (const auto& e : p.entries) entries.push_back(e ? Json(*e) : Json(nullptr));
                j["phase"] = entries;
                text = "phase " + p.to_string() + "\n";
                if (c.order() <= BigInt(static_cast<unsigned long>(enumeration_limits().burger))) {
                    const bool agree = phase_vector_from_gauss(c) == p;
                    j["gauss_cross_check"] = agree;
                    text += std::string("gauss cross-check ") + (agree ? "agrees" : "DISAGREES") + "\n";
                    if (!agree) throw std::logic_error("phase vector disagrees with Gauss sums");
                } else {
                    j["gauss_cross_check"] = nullptr;
                    text += "gauss cross-check skipped (enumeration bound)\n";
                }
            }
            emit(json, j, text);
            return kOk;
        }
        if (*gauss_cmd) {
            const auto parts = primary_decompose(as_group(parse_input_file(file_a)));
            const PrimaryComponent& c = two_part(parts);
            const CyclotomicElement brute = gauss_sum_bruteforce(c, k);
            const CyclotomicElement closed = gauss_sum_closed_form(wall_decompose(c).summands, k);
            const bool agree = brute.embed(std::max(brute.level(), closed.level())) ==
                               closed.embed(std::max(brute.level(), closed.level()));
            const auto phase = phase_of(brute);
            Json j{{"k", k}, {"enumerated", brute.to_string()}, {"closed_form", closed.to_string()}, {"agree", agree},
                   {"phase", phase ? Json(*phase) : Json(nullptr)}};
            emit(json, j,
                 "Gamma_" + std::to_string(k) + " = " + brute.to_string() + "\nclosed form " + closed.to_string() +
                     (agree ? "\nagree\n" : "\nDISAGREE\n"));
            return agree ? kOk : kInternal;
        }
        if (*count_cmd) {
            const LinkedGroup g = as_group(parse_input_file(file_a));
            if (g.t() == 0) throw ParseError("class count needs torsion");
            const bool even = is_even_linking(g);
            const BigInt count = class_count(g.torsion.front(), even);
            Json j{{"tau", g.torsion.front().get_str()}, {"parity", even ? "even" : "odd"}, {"class_count", count.get_str()}};
            emit(json, j,
                 "tau " + g.torsion.front().get_str() + "\nparity " + (even ? "even" : "odd") + "\nclasses " +
                     count.get_str() + "\n");
            return kOk;
        }
        if (*selftest_cmd) return run_selftest(max_size, seed, std::cout) == 0 ? kOk : kInternal;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const NotSymplecticError& e) {
        std::cerr << "not symplectic: failing identity " << e.identity() << "\n";
        return kNotSymplectic;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kSizeLimit;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
