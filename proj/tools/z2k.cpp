// Command-line front end: Gray map tables, Phi and its inverse, code
// analysis, property verification, 1-perfectness and Gray map search.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace z2k::cli {
namespace {

struct Common {
    bool json_out = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
    std::size_t size_limit = default_size_limit;
};

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------- gray

int cmd_gray(const Common& c, int k) {
    if (k < 1 || k > 16) {
        std::cerr << "error: --k must be in [1, 16]\n";
        return kInputError;
    }
    const auto& table = gray_table(k);
    if (!c.json_out) {
        for (int j = 0; j < 2 * k; ++j)
            std::cout << j << ':' << table[j].to_string() << " lee=" << lee_weight(j, 2 * k) << '\n';
        return kOk;
    }
    auto doc = make_report("gray", {{"command", "gray"}, {"k", k}});
    json rows = json::array();
    for (int j = 0; j < 2 * k; ++j)
        rows.push_back({{"j", j}, {"bits", table[j].to_string()}, {"lee_weight", lee_weight(j, 2 * k)}});
    doc["values"] = {{"k", k}, {"rows", rows}};
    emit(doc);
    return kOk;
}

// ---------------------------------------------------------------- map / unmap

int cmd_map(const Common& c, int k, const std::string& vector_text) {
    if (k < 1) throw Error("--k must be >= 1");
    const auto coords = parse_vector(vector_text);
    const ZkVector v(2 * k, coords);
    const auto w = big_phi(v);
    if (!c.json_out) {
        std::cout << w.to_string() << '\n';
        return kOk;
    }
    auto doc = make_report("map", {{"command", "map"}, {"k", k}, {"vector", coords}});
    const auto perm = pi_x(v);
    json pi = json::array();
    for (auto p : perm.images()) pi.push_back(p + 1);
    doc["values"] = {{"k", k}, {"vector", join(coords)}, {"bits", w.to_string()}, {"permutation", pi}};
    emit(doc);
    return kOk;
}

int cmd_unmap(const Common& c, int k, const std::string& bits) {
    if (k < 1) throw Error("--k must be >= 1");
    const auto w = BinaryWord::from_string(bits);
    auto doc = make_report("unmap", {{"command", "unmap"}, {"k", k}, {"bits", bits}});
    try {
        const auto v = big_phi_inverse(w, k);
        std::vector<int> coords(v.coords().begin(), v.coords().end());
        if (!c.json_out) {
            std::cout << join(coords) << '\n';
            return kOk;
        }
        doc["values"] = {{"k", k}, {"bits", bits}, {"vector", join(coords)}};
        emit(doc);
        return kOk;
    } catch (const NotInImage& e) {
        std::cerr << "not in image: " << e.what() << '\n';
        if (c.json_out) {
            doc["verdict"] = false;
            doc["notes"].push_back(std::string("not in image: ") + e.what());
            emit(doc);
        }
        return kNotInImage;
    }
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Common& c, const std::string& path) {
    const auto input = read_json_file(path);
    auto spec = parse_spec(input);
    const auto code = span(spec, c.size_limit);
    const auto mini = minimize_type(code);

    json values = {{"N", code.size()},
                   {"type", code.type().to_string()},
                   {"binary_length", code.type().binary_length()},
                   {"minimized_type", mini.type.to_string()},
                   {"minimization", minimization_json(mini)},
                   {"decomposable", code.decomposable()}};
    json notes = json::array();
    if (mini.any_evenness_restored())
        notes.push_back("a block reduced to an odd modulus; a factor 2 was restored to keep the type even");
    if (code.size() >= 2) {
        values["min_lee_distance"] = min_lee_distance(code);
        values["min_hamming_distance"] = min_hamming_distance_binary(code);
    } else {
        values["min_lee_distance"] = nullptr;
        values["min_hamming_distance"] = nullptr;
        notes.push_back("code has a single codeword; minimum distances undefined");
    }
    if (code.type().single_modulus()) {
        const auto rates = info_rates(code);
        values["R"] = rates.rate;
        values["R_prime"] = rates.binary_rate;
    } else {
        values["R"] = nullptr;
        values["R_prime"] = nullptr;
        notes.push_back("information rates are reported for single-modulus codes only");
    }

    if (!c.json_out) {
        std::cout << "N=" << code.size() << '\n'
                  << "type=" << code.type().to_string() << '\n'
                  << "minimized_type=" << mini.type.to_string() << '\n'
                  << "decomposable=" << (code.decomposable() ? "true" : "false") << '\n';
        if (code.size() >= 2)
            std::cout << "d_L=" << values["min_lee_distance"].get<int>() << '\n'
                      << "d_H=" << values["min_hamming_distance"].get<std::size_t>() << '\n';
        if (code.type().single_modulus()) {
            std::cout << std::fixed << std::setprecision(4) << "R=" << values["R"].get<double>() << '\n'
                      << "R'=" << values["R_prime"].get<double>() << '\n';
        }
        for (const auto& n : notes) std::cerr << "note: " << n.get<std::string>() << '\n';
        return kOk;
    }
    auto doc = make_report("analyze", {{"command", "analyze"}, {"spec", spec_json(spec)}, {"size_limit", c.size_limit}});
    doc["values"] = values;
    doc["notes"] = notes;
    emit(doc);
    return kOk;
}

// ---------------------------------------------------------------- verify

/// z = (1 0...0 1) on the first coordinate of every block with k > 2.
std::vector<BinaryWord> translation_probes(const MixedGroupType& type) {
    std::vector<BinaryWord> probes;
    for (std::size_t j = 0; j < type.block_count(); ++j) {
        const int k = type.block(j).half();
        if (k <= 2) continue;
        BinaryWord z(type.binary_length());
        const auto off = type.binary_offset(j);
        const auto zk = translation_witness_z(k);
        for (std::size_t p = 0; p < zk.size(); ++p) z.set(off + p, zk[p]);
        probes.push_back(std::move(z));
    }
    return probes;
}

int cmd_verify(const Common& c, const std::string& path, const std::string& property) {
    const auto input = read_json_file(path);
    auto spec = parse_spec(input);
    const auto code = span(spec, c.size_limit);
    const auto image = binary_image(code);
    CheckOptions opt;
    opt.seed = c.seed;
    opt.threads = c.threads;
    opt.exhaustive_limit = c.exhaustive_limit;

    auto doc = make_report("verify", {{"command", "verify"},
                                      {"spec", spec_json(spec)},
                                      {"property", property},
                                      {"seed", c.seed},
                                      {"exhaustive_limit", c.exhaustive_limit}});
    doc["seed"] = c.seed;
    bool passed = true;
    std::string human;

    if (property == "propelinear") {
        const auto rep = check_propelinear(image, opt);
        passed = rep.passed();
        json axioms = json::object();
        for (const auto& a : rep.axioms) {
            axioms[a.name] = {{"passed", a.passed}, {"exhaustive", a.exhaustive}, {"checked", a.checked}};
            human += a.name + ": " + (a.passed ? "pass" : "FAIL") + "\n";
            if (a.counterexample) {
                for (const auto& w : a.counterexample->words) doc["witnesses"].push_back(w.to_string());
                doc["notes"].push_back(a.name + ": " + a.counterexample->description);
                human += "  " + a.counterexample->description + "\n";
            }
        }
        doc["values"] = {{"property", property}, {"codewords", image.size()}, {"axioms", axioms}};
    } else if (property == "hamming") {
        const auto rep = check_hamming_compatible(image, opt);
        passed = rep.passed;
        doc["values"] = {{"property", property},
                         {"codewords", image.size()},
                         {"exhaustive", rep.exhaustive},
                         {"checked", rep.checked}};
        human = std::string("hamming-compatible: ") + (rep.passed ? "pass" : "FAIL") + (rep.exhaustive ? " (exhaustive)" : " (sampled)") + "\n";
        if (rep.witness) {
            doc["witnesses"] = {rep.witness->first.to_string(), rep.witness->second.to_string()};
            doc["notes"].push_back("d(x, x*v) = " + std::to_string(rep.witness_distance) + " but wt(v) = " +
                                   std::to_string(rep.witness->second.weight()));
            human += "witness x=" + rep.witness->first.to_string() + " v=" + rep.witness->second.to_string() + "\n";
        }
    } else if (property == "translation") {
        opt.probe_first = translation_probes(code.type());
        const auto rep = check_translation_invariant(image, opt);
        passed = rep.invariant;
        doc["values"] = {{"property", property},
                         {"codewords", image.size()},
                         {"exhaustive", rep.exhaustive},
                         {"checked", rep.checked}};
        human = std::string("translation-invariant: ") + (rep.invariant ? "TRUE" : "FALSE") + "\n";
        if (rep.witness) {
            const auto& w = *rep.witness;
            doc["witnesses"] = {w.x.to_string(), w.y.to_string(), w.u.to_string()};
            doc["values"]["distance_before"] = w.distance_before;
            doc["values"]["distance_after"] = w.distance_after;
            human += "witness x=" + w.x.to_string() + " y=" + w.y.to_string() + " u=" + w.u.to_string() +
                     " d(x,y)=" + std::to_string(w.distance_before) + " d(x*u,y*u)=" + std::to_string(w.distance_after) + "\n";
        }
    } else {
        throw Error("unknown property '" + property + "' (expected propelinear, hamming or translation)");
    }

    doc["verdict"] = passed;
    if (c.json_out) emit(doc);
    else std::cout << human;
    return passed ? kOk : kViolated;
}

// ---------------------------------------------------------------- perfect

int cmd_perfect(const Common& c, const std::optional<std::string>& path, std::optional<int> hamming_r) {
    if (path.has_value() == hamming_r.has_value()) throw Error("give exactly one of a spec file or --hamming R");
    GeneratorSpec spec;
    json input = {{"command", "perfect"}};
    if (hamming_r) {
        spec = hamming_spec(*hamming_r);
        input["hamming"] = *hamming_r;
    } else {
        spec = parse_spec(read_json_file(*path));
        input["spec"] = spec_json(spec);
    }
    const auto code = span(spec, c.size_limit);
    PerfectOptions popt;
    popt.covering_scan = true;
    const auto cls = classify_if_perfect(code, popt);

    auto doc = make_report("perfect", input);
    json values = {{"perfectness", perfectness_json(cls.perfect)},
                   {"minimized_type", cls.minimized.type.to_string()},
                   {"classified", cls.classified},
                   {"unexpected_modulus", cls.unexpected_modulus}};
    if (cls.classified) {
        values["binary_coordinates"] = cls.binary_coordinates;
        values["quaternary_coordinates"] = cls.quaternary_coordinates;
    }
    for (const auto& w : cls.perfect.witness) doc["witnesses"].push_back(w.to_string());
    if (!cls.perfect.witness_note.empty()) doc["notes"].push_back(cls.perfect.witness_note);
    doc["notes"].push_back(cls.note);

    std::optional<ObstructionReport> ob;
    try {
        ob = large_modulus_obstruction(code);
    } catch (const NotApplicable& e) {
        doc["notes"].push_back(std::string("obstruction not applicable: ") + e.what());
    }
    if (ob) {
        values["obstruction"] = obstruction_json(*ob);
        doc["witnesses"].push_back(ob->x.word.to_string());
        if (ob->u) doc["witnesses"].push_back(ob->u->word.to_string());
        if (ob->v) doc["witnesses"].push_back(ob->v->word.to_string());
    }
    doc["values"] = values;
    doc["verdict"] = cls.perfect.verdict;

    const bool violated = cls.unexpected_modulus;
    if (c.json_out) {
        emit(doc);
    } else {
        const auto& p = cls.perfect;
        std::cout << "1-perfect=" << (p.verdict ? "TRUE" : "FALSE") << '\n'
                  << "length=" << p.length << " codewords=" << p.codewords << '\n'
                  << "sphere_packing=" << p.codewords << "*" << (p.length + 1) << (p.sphere_packing_holds ? "=" : "!=")
                  << "2^" << p.length << '\n'
                  << "min_distance=" << (p.min_distance ? std::to_string(*p.min_distance) : std::string("none")) << '\n'
                  << "minimized_type=" << cls.minimized.type.to_string() << '\n';
        if (cls.classified)
            std::cout << "classification=(Z2^" << cls.binary_coordinates << ", Z4^" << cls.quaternary_coordinates << ")\n";
        if (ob) {
            std::cout << "obstruction x=" << ob->x.word.to_string() << '\n';
            if (ob->u) std::cout << "obstruction u=" << ob->u->word.to_string() << " v=" << ob->v->word.to_string() << '\n';
            for (const auto& r : ob->reasons) std::cout << "  " << r << '\n';
        }
        if (cls.unexpected_modulus) std::cerr << "ALERT: " << cls.note << '\n';
    }
    return violated ? kViolated : kOk;
}

// ---------------------------------------------------------------- search

int cmd_search(const Common& c, int r, int m, bool orbits, bool compatible_only) {
    if (r < 2 || r > max_search_r || m < 1 || m > max_search_m) {
        std::cerr << "error: search needs 2 <= r <= " << max_search_r << " and 1 <= m <= " << max_search_m << '\n';
        return kInputError;
    }
    auto doc = make_report("search", {{"command", "search"}, {"r", r}, {"m", m}, {"orbits", orbits}, {"compatible_only", compatible_only}});
    json values = {{"r", r}, {"m", m}};
    std::string human;

    if (r % 2 != 0) {
        const auto total = count_gray_maps(r, m);
        values["total"] = total;
        human = "total=" + std::to_string(total) + "\n";
        doc["notes"].push_back("odd r: Hamming compatibility is undefined");
    } else {
        const auto rep = uniqueness_report(r, m);
        values["total"] = rep.total;
        values["compatible"] = rep.compatible;
        human = "total=" + std::to_string(rep.total) + " compatible=" + std::to_string(rep.compatible);
        if (orbits) {
            values["orbits"] = rep.orbits;
            human += " orbits=" + std::to_string(rep.orbits);
        }
        human += "\n";
        values["survivors_fix_zero"] = rep.survivors_fix_zero;
        values["survivors_distance_preserving"] = rep.survivors_distance_preserving;
        if (rep.survivors_within_reference_orbit) {
            const bool same = *rep.survivors_within_reference_orbit && *rep.reference_orbit_within_survivors;
            values["survivors_equal_permuted_phi"] = same;
        }
        if (compatible_only) {
            json maps = json::array();
            for (const auto& s : rep.survivors) {
                maps.push_back(s.to_string());
                human += s.to_string() + "\n";
            }
            values["maps"] = maps;
            if (values.contains("survivors_equal_permuted_phi"))
                human += std::string("all coordinate permutations of phi: ") +
                         (values["survivors_equal_permuted_phi"].get<bool>() ? "yes" : "no") + "\n";
        }
    }
    doc["values"] = values;
    if (c.json_out) emit(doc);
    else std::cout << human;
    return kOk;
}

}  // namespace
}  // namespace z2k::cli

int main(int argc, char** argv) {
    using namespace z2k::cli;
    CLI::App app{"Z2k codes as binary propelinear codes"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_flag("--json", common.json_out, "Emit a JSON report on stdout");
    app.add_option("--seed", common.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--threads", common.threads, "Worker threads for exhaustive checks")->capture_default_str()->check(CLI::Range(1U, 256U));
    app.add_option("--exhaustive-limit", common.exhaustive_limit, "Largest domain scanned exhaustively")->capture_default_str();
    app.add_option("--size-limit", common.size_limit, "Maximum number of codewords when spanning")->capture_default_str();

    int k = 0;
    std::string vector_text, bits, spec_path, property;
    int r = 0, m = 0;
    bool orbits = false, compatible_only = false;
    std::optional<int> hamming_r;
    std::optional<std::string> perfect_path;

    auto* gray = app.add_subcommand("gray", "Print the Gray map table for Z_2k");
    gray->add_option("--k", k, "Half the modulus")->required();

    auto* map = app.add_subcommand("map", "Phi of a comma-separated vector over Z_2k");
    map->add_option("--k", k)->required();
    map->add_option("--vector", vector_text)->required();

    auto* unmap = app.add_subcommand("unmap", "Inverse of Phi on a bit string");
    unmap->add_option("--k", k)->required();
    unmap->add_option("--bits", bits)->required();

    auto* analyze = app.add_subcommand("analyze", "Span a code spec and report its parameters");
    analyze->add_option("spec", spec_path, "CodeSpecDocument JSON file")->required();

    auto* verify = app.add_subcommand("verify", "Check a property of the binary image");
    verify->add_option("spec", spec_path, "CodeSpecDocument JSON file")->required();
    verify->add_option("--property", property, "propelinear | hamming | translation")->required();

    auto* perfect = app.add_subcommand("perfect", "1-perfectness and the large-modulus obstruction");
    perfect->add_option("spec", perfect_path, "CodeSpecDocument JSON file");
    perfect->add_option("--hamming", hamming_r, "Use the binary Hamming code with r parity bits");

    auto* search = app.add_subcommand("search", "Enumerate Gray maps Z_r -> F_2^m");
    search->add_option("--r", r)->required();
    search->add_option("--m", m)->required();
    search->add_flag("--orbits", orbits, "Count orbits under coordinate permutation");
    search->add_flag("--compatible-only", compatible_only, "List the Hamming-compatible maps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*gray) return cmd_gray(common, k);
        if (*map) return cmd_map(common, k, vector_text);
        if (*unmap) return cmd_unmap(common, k, bits);
        if (*analyze) return cmd_analyze(common, spec_path);
        if (*verify) return cmd_verify(common, spec_path, property);
        if (*perfect) return cmd_perfect(common, perfect_path, hamming_r);
        if (*search) return cmd_search(common, r, m, orbits, compatible_only);
    } catch (const z2k::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const z2k::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
