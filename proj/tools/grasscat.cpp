// grasscat: profiles, roots, and Auslander-Reiten combinatorics of the
// Grassmannian cluster categories CM(B_{k,n}) on the command line.

#include "CLI11.hpp"

#include "grasscat/artube.hpp"
#include "grasscat/configs.hpp"
#include "grasscat/enumeration.hpp"
#include "grasscat/io.hpp"

#include <iostream>
#include <thread>

using namespace grasscat;
using nlohmann::json;

namespace {

struct Common {
    std::string kn;
    int k = 0, n = 0;
    std::uint32_t prime = 32003;
    std::uint32_t prime2 = 65537;
    int truncation = 0; // 0: default for n
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::string format = "json";
    int jobs = 1;
    bool allow_large_k = false;
    bool count_only = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--kn", c.kn, "parameters as k,n (e.g. 3,9)");
    cmd->add_option("--k", c.k, "subset size k");
    cmd->add_option("--n", c.n, "cycle length n");
    cmd->add_option("--p", c.prime, "working prime");
    cmd->add_option("--p2", c.prime2, "second prime for cross-checks");
    cmd->add_option("--N", c.truncation, "truncation order (default 6n)");
    cmd->add_option("--seed", c.seeds, "seed list for generic choices");
    cmd->add_option("--format", c.format, "output format: json, tsv or dot");
    cmd->add_option("--jobs", c.jobs, "worker threads for enumerations");
    cmd->add_flag("--allow-large-k", c.allow_large_k, "permit k > n/2");
    cmd->add_flag("--count-only", c.count_only, "print only the count");
}

void resolve_kn(Common& c) {
    if (!c.kn.empty()) {
        const auto comma = c.kn.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--kn expects k,n");
        c.k = std::stoi(c.kn.substr(0, comma));
        c.n = std::stoi(c.kn.substr(comma + 1));
    }
    if (c.k < 1 || c.n < 1) throw CLI::ValidationError("missing or invalid k, n");
    if (2 * c.k > c.n && !c.allow_large_k)
        throw CLI::ValidationError("k > n/2; pass --allow-large-k to override");
}

Profile parse_profile(const Common& c, const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        const json j = json::parse(text);
        std::vector<KSubset> rows;
        for (const auto& r : j) rows.emplace_back(c.n, r.get<std::vector<int>>());
        if (rows.empty()) throw domain_error("empty profile");
        const int k = rows.front().k();
        return Profile(c.n, k, std::move(rows));
    }
    if (!text.empty() && text.front() == '{') return profile_from_json(json::parse(text));
    return profile_from_string(text, c.n);
}

KSubset parse_subset(const Common& c, const std::string& text) {
    std::vector<int> e;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) e.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return KSubset(c.n, std::move(e));
}

json header(const Common& c) {
    return json{{"schema", "grasscat/1"}, {"k", c.k}, {"n", c.n}, {"seeds", c.seeds}};
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

RecoveryOptions recovery_options(const Common& c) {
    RecoveryOptions opt;
    opt.prime = c.prime;
    opt.truncation = c.truncation;
    opt.seeds = c.seeds;
    return opt;
}

int run_root(Common& c, const std::string& profile_text) {
    resolve_kn(c);
    const auto P = parse_profile(c, profile_text);
    auto out = header(c);
    out["profile"] = to_compact_string(P);
    out["root"] = to_json(profile_root(P));
    emit(out);
    return 0;
}

int run_classify_profile(Common& c, const std::string& profile_text) {
    resolve_kn(c);
    const auto P = parse_profile(c, profile_text);
    auto out = header(c);
    out["profile"] = to_compact_string(P);
    out["weakly_column_decreasing"] = is_weakly_column_decreasing(P);
    out["canonical"] = is_canonical(P);
    out["interlacing"] = is_interlacing(P);
    const auto rot = canonical_rotation(P);
    out["canonical_rotation"] = rot ? json(to_compact_string(*rot)) : json();
    out["root"] = to_json(profile_root(P));
    if (P.rank() >= 2) {
        const auto S = simplify(poset_from_profile(P));
        out["configuration"] = {{"verdict", to_string(generic_indecomposable(S))},
                                {"dot", to_dot(S)}};
    }
    emit(out);
    return 0;
}

int run_boxes(Common& c, const std::string& upper, const std::string& lower) {
    resolve_kn(c);
    const auto I = parse_subset(c, upper), J = parse_subset(c, lower);
    auto out = header(c);
    const auto d = rim_difference(I, J);
    json zeros = json::array();
    for (int j = 1; j <= c.n; ++j)
        if (d[j] == 0) zeros.push_back(j);
    out["branching_points"] = zeros;
    json boxes = json::array();
    for (const auto& b : quasi_boxes(I, J)) boxes.push_back(to_json(b));
    out["quasi_boxes"] = boxes;
    emit(out);
    return 0;
}

int run_collapse(Common& c, const std::string& upper, const std::string& lower, int a) {
    resolve_kn(c);
    const auto I = parse_subset(c, upper), J = parse_subset(c, lower);
    auto out = header(c);
    const auto [ci, cj] = collapse(I, J);
    out["collapse"] = {{"n", ci.n}, {"upper", ci.elems}, {"lower", cj.elems}};
    if (a != 0) {
        const auto [si, sj] = a_shift(I, J, a);
        out["a_shift"] = {{"a", a}, {"upper", si.elems}, {"lower", sj.elems}};
    }
    emit(out);
    return 0;
}

int run_shift(Common& c, const std::string& profile_text, int a) {
    resolve_kn(c);
    const auto P = parse_profile(c, profile_text);
    auto out = header(c);
    out["profile"] = to_compact_string(P);
    out["a"] = a;
    out["shifted"] = to_compact_string(profile_shift(P, a));
    emit(out);
    return 0;
}

int run_tau(Common& c, const std::string& profile_text) {
    resolve_kn(c);
    const auto P = parse_profile(c, profile_text);
    const auto r = tau_inverse_profile(P, recovery_options(c));
    auto out = header(c);
    out["profile"] = to_compact_string(P);
    out["tau_inverse"] = to_compact_string(r.profile);
    out["iso_verified"] = r.iso_verified;
    emit(out);
    return 0;
}

int run_ar(Common& c, const std::string& subset_text, bool dual) {
    resolve_kn(c);
    const auto I = parse_subset(c, subset_text);
    auto out = header(c);
    out["subset"] = I.elems;
    const auto a = ar_sequence_start(I);
    out["end_term"] = to_compact_string(a.end_term);
    out["middle_if_indecomposable"] = to_compact_string(a.middle);
    const auto& e = I.elems;
    const bool spread = e.size() == 3 && mod1(e[0] + 2, c.n) == e[1] &&
                        mod1(e[0] + 4, c.n) == e[2];
    if (spread) {
        const auto s = ar_split_rule(c.n, I.elems[0], dual);
        out["split"] = {{"summand", s.summand.elems},
                        {"rest", to_compact_string(s.rest)},
                        {"dual", dual}};
    }
    emit(out);
    return 0;
}

int run_tube(Common& c, const std::string& start_text, int max_steps) {
    resolve_kn(c);
    const auto P = parse_profile(c, start_text);
    const auto row = tube_walk(P, max_steps, recovery_options(c));
    if (c.format == "dot") {
        std::cout << tube_to_dot(row);
        return 0;
    }
    auto out = header(c);
    out["start"] = to_compact_string(P);
    out["period"] = row.period;
    json entries = json::array();
    for (const auto& e : row.entries) entries.push_back(to_compact_string(e));
    out["row"] = entries;
    emit(out);
    return 0;
}

int run_census(Common& c, bool tube_ids) {
    resolve_kn(c);
    if (c.k != 3 || c.n != 9)
        throw domain_error("census is implemented for (k,n) = (3,9)");
    auto census = census_39();
    if (c.count_only) {
        std::cout << census.size() << "\n";
        return 0;
    }
    std::vector<std::string> tubes(census.size());
    if (tube_ids) {
        const auto opt = recovery_options(c);
        const int workers = std::max(1, c.jobs);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (size_t i = w; i < census.size(); i += workers) {
                    try {
                        const auto row = tube_walk(census[i].profile, 16, opt);
                        Profile best = row.entries.front();
                        for (const auto& e : row.entries) best = std::min(best, e);
                        tubes[i] = to_compact_string(best);
                    } catch (const domain_error&) {
                        // the orbit leaves the reconstructed rank <= 3 region
                        tubes[i] = "-";
                    }
                }
            });
        for (auto& t : pool) t.join();
    }
    if (c.format == "tsv") {
        std::cout << "profile\tq\troot-type\ttube-id\n";
        for (size_t i = 0; i < census.size(); ++i) {
            const auto& e = census[i];
            std::cout << to_compact_string(e.profile) << '\t' << e.q.num << '\t'
                      << to_string(e.type) << '\t' << (tube_ids ? tubes[i] : e.orbit)
                      << "\n";
        }
        return 0;
    }
    auto out = header(c);
    out["count"] = census.size();
    json entries = json::array();
    for (size_t i = 0; i < census.size(); ++i) {
        auto j = to_json(census[i]);
        if (tube_ids) j["tube"] = tubes[i];
        entries.push_back(j);
    }
    out["census"] = entries;
    emit(out);
    return 0;
}

int run_enumerate(Common& c, const std::string& what, int m) {
    resolve_kn(c);
    if (what == "rank2-boxes") {
        if (c.count_only && c.jobs > 1) {
            const auto subsets = all_k_subsets(c.k, c.n);
            std::vector<long long> partial(static_cast<size_t>(c.jobs), 0);
            std::vector<std::thread> pool;
            for (int w = 0; w < c.jobs; ++w)
                pool.emplace_back([&, w] {
                    for (size_t i = w; i < subsets.size(); i += c.jobs)
                        for (const auto& J : subsets) {
                            if (subsets[i] == J) continue;
                            const auto [ci, cj] = collapse(subsets[i], J);
                            if (ci.k() < 3) continue;
                            const auto boxes = quasi_boxes(ci, cj);
                            if (boxes.size() == 3 &&
                                std::all_of(boxes.begin(), boxes.end(),
                                            [](const QuasiBox& b) { return b.is_box; }))
                                ++partial[w];
                        }
                });
            for (auto& t : pool) t.join();
            long long total = 0;
            for (long long p : partial) total += p;
            std::cout << total << "\n";
            return 0;
        }
        if (c.count_only) {
            std::cout << enumerate_three_box_rank2(c.k, c.n, nullptr) << "\n";
            return 0;
        }
        for (const auto& P : enumerate_three_box_rank2(c.k, c.n))
            std::cout << to_compact_string(P) << "\n";
        return 0;
    }
    if (what == "canonical") {
        const auto list = enumerate_canonical_real(c.k, c.n, m);
        if (c.count_only) {
            std::cout << list.size() << "\n";
            return 0;
        }
        for (const auto& P : list) std::cout << to_compact_string(P) << "\n";
        return 0;
    }
    if (what == "imaginary") {
        const auto list = enumerate_imaginary_rank3(c.n);
        if (c.count_only) {
            std::cout << list.size() << "\n";
            return 0;
        }
        for (const auto& e : list)
            std::cout << to_compact_string(e.profile) << '\t' << e.pattern << '\t'
                      << (e.rigid_pattern ? "rigid" : "tau-invariant") << "\n";
        return 0;
    }
    throw CLI::ValidationError("enumerate expects rank2-boxes, canonical or imaginary");
}

int run_oracle_check(Common& c, const std::string& profile_text) {
    resolve_kn(c);
    const auto P = parse_profile(c, profile_text);
    auto out = header(c);
    out["profile"] = to_compact_string(P);
    json per_prime = json::array();
    for (const std::uint32_t p : {c.prime, c.prime2}) {
        const TruncatedRing R(p, c.truncation > 0 ? c.truncation
                                                  : default_truncation(c.n));
        json votes = json::array();
        for (const auto seed : c.seeds) {
            const auto M = build_from_profile(R, P, seed);
            assert_relations(M);
            votes.push_back({{"seed", seed},
                             {"ext1", ext1_dim(M, M)},
                             {"indecomposable", is_indecomposable(M, 20, seed)},
                             {"cover", projective_cover_indices(M)},
                             {"content", content_vector(M)}});
        }
        per_prime.push_back({{"p", p}, {"runs", votes}});
    }
    out["oracle"] = per_prime;
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grassmannian cluster category toolkit"};
    app.require_subcommand(1);

    Common c;
    std::string profile_text, upper, lower, subset_text, what;
    int a = 0, m = 3, max_steps = 64;
    bool dual = false, tube_ids = false;

    auto* root = app.add_subcommand("root", "root-lattice data of a profile");
    add_common(root, c);
    root->add_option("--profile", profile_text, "profile (compact string or JSON)")->required();

    auto* cls = app.add_subcommand("classify-profile", "canonical/interlacing/root report");
    add_common(cls, c);
    cls->add_option("--profile", profile_text)->required();

    auto* boxes = app.add_subcommand("boxes", "quasi-boxes between two rims");
    add_common(boxes, c);
    boxes->add_option("--upper", upper, "upper k-subset (comma separated)")->required();
    boxes->add_option("--lower", lower, "lower k-subset")->required();

    auto* coll = app.add_subcommand("collapse", "collapse and a-shift of a rank-2 pair");
    add_common(coll, c);
    coll->add_option("--upper", upper)->required();
    coll->add_option("--lower", lower)->required();
    coll->add_option("--a", a, "also report the a-shift");

    auto* shift = app.add_subcommand("shift", "rowwise shift of a profile");
    add_common(shift, c);
    shift->add_option("--profile", profile_text)->required();
    shift->add_option("--a", a)->required();

    auto* tau = app.add_subcommand("tau", "profile of the inverse AR translate");
    add_common(tau, c);
    tau->add_option("--profile", profile_text)->required();

    auto* ar = app.add_subcommand("ar", "AR sequence data for a 3-subset with three peaks");
    add_common(ar, c);
    ar->add_option("--subset", subset_text)->required();
    ar->add_flag("--dual", dual, "use the dual splitting rule");

    auto* tube = app.add_subcommand("tube", "walk a tau-orbit from a starting profile");
    add_common(tube, c);
    tube->add_option("--start", profile_text)->required();
    tube->add_option("--max-steps", max_steps);

    auto* census = app.add_subcommand("census", "rigid indecomposable rank-3 census");
    add_common(census, c);
    census->add_flag("--tube-ids", tube_ids, "label entries by their tau-orbit");

    auto* enumerate = app.add_subcommand("enumerate", "generators and counts");
    add_common(enumerate, c);
    enumerate->add_option("what", what, "rank2-boxes, canonical or imaginary")->required();
    enumerate->add_option("--m", m, "row count for canonical enumeration");

    auto* oracle = app.add_subcommand("oracle-check", "matrix oracle verdicts for a profile");
    add_common(oracle, c);
    oracle->add_option("--profile", profile_text)->required();

    try {
        app.parse(argc, argv);
        if (root->parsed()) return run_root(c, profile_text);
        if (cls->parsed()) return run_classify_profile(c, profile_text);
        if (boxes->parsed()) return run_boxes(c, upper, lower);
        if (coll->parsed()) return run_collapse(c, upper, lower, a);
        if (shift->parsed()) return run_shift(c, profile_text, a);
        if (tau->parsed()) return run_tau(c, profile_text);
        if (ar->parsed()) return run_ar(c, subset_text, dual);
        if (tube->parsed()) return run_tube(c, profile_text, max_steps);
        if (census->parsed()) return run_census(c, tube_ids);
        if (enumerate->parsed()) return run_enumerate(c, what, m);
        if (oracle->parsed()) return run_oracle_check(c, profile_text);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
