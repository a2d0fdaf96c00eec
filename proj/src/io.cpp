#include "grasscat/io.hpp"

#include <sstream>

namespace grasscat {

json to_json(const KSubset& I) {
    return json{{"n", I.n}, {"k", I.k()}, {"elements", I.elems}};
}

KSubset ksubset_from_json(const json& j) {
    return KSubset(j.at("n").get<int>(), j.at("elements").get<std::vector<int>>());
}

json to_json(const Profile& P) {
    json rows = json::array();
    for (const auto& r : P.rows) rows.push_back(r.elems);
    return json{{"n", P.n}, {"k", P.k}, {"rows", rows}};
}

Profile profile_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    std::vector<KSubset> rows;
    for (const auto& r : j.at("rows"))
        rows.emplace_back(n, r.get<std::vector<int>>());
    if (rows.empty()) throw std::invalid_argument("profile_from_json: no rows");
    const int k = rows.front().k();
    return Profile(n, k, std::move(rows));
}

json to_json(const ProfileRootData& d) {
    json coords = json::array();
    for (long long c : d.coords.c) coords.push_back(c);
    return json{{"x", d.x.x},
                {"q", d.q.den == 1 ? json(d.q.num)
                                   : json(std::to_string(d.q.num) + "/" +
                                          std::to_string(d.q.den))},
                {"type", to_string(d.type)},
                {"beta", d.coords.c_beta},
                {"alpha", coords},
                {"phi", format_simple_coords(d.coords)}};
}

namespace {

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"coeffs", rows}};
}

Mat mat_from_json(const TruncatedRing& R, const json& j) {
    Mat m(R, j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& rows = j.at("coeffs");
    for (int i = 0; i < m.rows; ++i)
        for (int c = 0; c < m.cols; ++c) {
            auto coeffs = rows[i][c].get<std::vector<std::uint32_t>>();
            coeffs.resize(static_cast<size_t>(R.N), 0);
            m.at(i, c) = std::move(coeffs);
        }
    return m;
}

} // namespace

json to_json(const TruncatedModule& M) {
    json xs = json::array(), ys = json::array();
    for (const auto& m : M.X) xs.push_back(mat_to_json(m));
    for (const auto& m : M.Y) ys.push_back(mat_to_json(m));
    return json{{"p", M.ring.p}, {"N", M.ring.N}, {"n", M.n}, {"k", M.k},
                {"rank", M.s},  {"x", xs},        {"y", ys}};
}

TruncatedModule module_from_json(const json& j) {
    TruncatedModule M;
    M.ring = TruncatedRing(j.at("p").get<std::uint32_t>(), j.at("N").get<int>());
    M.n = j.at("n").get<int>();
    M.k = j.at("k").get<int>();
    M.s = j.at("rank").get<int>();
    M.prec = M.ring.N;
    for (const auto& m : j.at("x")) M.X.push_back(mat_from_json(M.ring, m));
    for (const auto& m : j.at("y")) M.Y.push_back(mat_from_json(M.ring, m));
    assert_relations(M);
    return M;
}

json to_json(const QuasiBox& b) {
    return json{{"from", b.arc_start}, {"to", b.arc_end},   {"edges", b.arc_edges},
                {"size", b.size},      {"cosize", b.cosize}, {"box", b.is_box}};
}

json to_json(const CensusEntry& e) {
    return json{{"profile", to_compact_string(e.profile)},
                {"q", e.q.num},
                {"type", to_string(e.type)},
                {"orbit", e.orbit}};
}

std::string tube_to_dot(const TubeRow& row) {
    std::ostringstream os;
    os << "digraph tube {\n  rankdir=LR;\n";
    for (size_t i = 0; i < row.entries.size(); ++i)
        os << "  m" << i << " [label=\"" << to_compact_string(row.entries[i]) << "\"];\n";
    for (size_t i = 0; i + 1 < row.entries.size(); ++i)
        os << "  m" << i << " -> m" << i + 1 << ";\n";
    if (row.period > 0 && !row.entries.empty())
        os << "  m" << row.entries.size() - 1 << " -> m0;\n";
    os << "}\n";
    return os.str();
}

} // namespace grasscat
