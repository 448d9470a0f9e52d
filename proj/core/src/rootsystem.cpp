#include "alcove/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "alcove/errors.hpp"

namespace alcove {

void DynkinType::validate() const {
    auto bad = [&](const std::string& why) {
        throw InvalidRank(str() + " (" + why + ")");
    };
    switch (family) {
        case 'A':
            if (rank < 1 || rank > 16) bad("A requires 1 <= rank <= 16");
            break;
        case 'B':
        case 'C':
            if (rank < 2 || rank > 16) bad("B/C require 2 <= rank <= 16");
            break;
        case 'D':
            if (rank < 3 || rank > 16) bad("D requires 3 <= rank <= 16");
            break;
        case 'E':
            if (rank < 6 || rank > 8) bad("E requires rank in {6,7,8}");
            break;
        case 'F':
            if (rank != 4) bad("F requires rank 4");
            break;
        case 'G':
            if (rank != 2) bad("G requires rank 2");
            break;
        default:
            bad("unknown family");
    }
}

DynkinType DynkinType::parse(const std::string& s) {
    if (s.size() < 2) throw ParseError("Dynkin type too short: '" + s + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad Dynkin type: '" + s + "'");
    DynkinType t{fam, std::stoi(s.substr(1))};
    t.validate();
    return t;
}

std::vector<std::vector<int>> cartan_matrix(DynkinType dynkin) {
    dynkin.validate();
    int n = dynkin.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };  // 0-based
    switch (dynkin.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee> = -2
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case 'F':
            link(0, 1);
            link(1, 2);
            link(2, 3);
            c[2][1] = -2;  // <alpha_2, alpha_3^vee> = -2
            break;
        case 'G':
            link(0, 1);
            c[0][1] = -3;  // <alpha_2, alpha_1^vee> = -3
            break;
    }
    return c;
}

RootSystem::RootSystem(DynkinType dynkin) : dynkin_(dynkin) {
    dynkin_.validate();
    cartan_ = cartan_matrix(dynkin_);
    const int n = dynkin_.rank;

    // Orbit of the simple roots under simple reflections, tracking the
    // coroot coefficients alongside.
    std::map<Root, std::vector<int>> seen;
    std::vector<Root> queue;
    for (int i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        seen[e] = e;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        Root a = queue.back();
        queue.pop_back();
        std::vector<int> b = seen.at(a);
        for (int j = 0; j < n; ++j) {
            int pair_a = 0, pair_b = 0;
            for (int k = 0; k < n; ++k) {
                pair_a += cartan_[j][k] * a[k];  // <a, alpha_j^vee>
                pair_b += b[k] * cartan_[k][j];  // <alpha_j, a^vee>
            }
            Root a2 = a;
            a2[j] -= pair_a;
            if (!seen.count(a2)) {
                std::vector<int> b2 = b;
                b2[j] -= pair_b;
                seen[a2] = b2;
                queue.push_back(a2);
            }
        }
    }

    std::vector<Root> pos;
    for (const auto& [r, cr] : seen)
        if (height(r) > 0) pos.push_back(r);
    std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x > y;  // reverse-lex so alpha_1 precedes alpha_2
    });
    npos_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (const auto& r : pos) roots_.push_back(negate(r));
    coroots_.reserve(roots_.size());
    for (const auto& r : roots_) coroots_.push_back(seen.at(r));
    highest_ = pos.back();
}

const RootSystem& RootSystem::get(DynkinType dynkin) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dynkin.family, dynkin.rank);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<RootSystem>(dynkin)).first;
    return *it->second;
}

int RootSystem::index_of(const Root& r) const {
    for (size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i] == r) return static_cast<int>(i);
    return -1;
}

std::vector<int> RootSystem::simple_coroot_coweight(int i) const {
    if (i < 0 || i >= rank()) throw IndexOutOfRange("simple index " + std::to_string(i));
    return cartan_[i];
}

std::vector<int> RootSystem::highest_coroot_coweight() const {
    const std::vector<int>& b = coroots_[npos_ - 1];  // highest is last positive
    std::vector<int> out(rank(), 0);
    for (int k = 0; k < rank(); ++k)
        for (int j = 0; j < rank(); ++j) out[j] += b[k] * cartan_[k][j];
    return out;
}

Rat RootSystem::pairing(const Root& r, const std::vector<Rat>& coords) const {
    if (static_cast<int>(r.size()) != rank() || static_cast<int>(coords.size()) != rank())
        throw RankMismatch("pairing: root/point rank disagree with " + dynkin_.str());
    Rat acc = 0;
    for (int i = 0; i < rank(); ++i) acc += Rat(r[i]) * coords[i];
    return acc;
}

GroupConstants group_constants(DynkinType dynkin) {
    dynkin.validate();
    const RootSystem& rs = RootSystem::get(dynkin);
    GroupConstants gc;
    gc.coxeter = 1 + height(rs.highest());
    const long n = dynkin.rank;
    switch (dynkin.family) {
        case 'A':
            gc.mixed_char_bound = gc.coxeter;
            gc.min_faithful_dim = n + 1;
            break;
        case 'B':
            gc.mixed_char_bound = 2 * n + 1;
            gc.min_faithful_dim = 2 * n + 1;
            break;
        case 'C':
            gc.mixed_char_bound = 2 * n + 1;
            gc.min_faithful_dim = 2 * n;
            break;
        case 'D':
            gc.mixed_char_bound = 2 * n + 1;
            gc.min_faithful_dim = 2 * n;
            break;
        case 'E':
            if (n == 6) { gc.mixed_char_bound = 27; gc.min_faithful_dim = 27; }
            else if (n == 7) { gc.mixed_char_bound = 56; gc.min_faithful_dim = 56; }
            else { gc.mixed_char_bound = gc.coxeter; gc.min_faithful_dim = 248; }
            break;
        case 'F':
            gc.mixed_char_bound = gc.coxeter;
            gc.min_faithful_dim = 26;
            break;
        case 'G':
            gc.mixed_char_bound = gc.coxeter;
            gc.min_faithful_dim = 7;
            break;
    }
    return gc;
}

}  // namespace alcove
