#include "cayley/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cayley {

// ---------------------------------------------------------------------------
// GroupSpec
// ---------------------------------------------------------------------------

GroupSpec GroupSpec::free_group(int rank) {
    GroupSpec s;
    s.kind = Kind::FreeGroup;
    s.rank = rank;
    return s;
}

GroupSpec GroupSpec::cyclic(int order) {
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.order = order;
    return s;
}

GroupSpec GroupSpec::free_product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::FreeProduct;
    s.left = std::make_shared<GroupSpec>(std::move(a));
    s.right = std::make_shared<GroupSpec>(std::move(b));
    return s;
}

GroupSpec GroupSpec::direct_product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::DirectProduct;
    s.left = std::make_shared<GroupSpec>(std::move(a));
    s.right = std::make_shared<GroupSpec>(std::move(b));
    return s;
}

GroupSpec GroupSpec::raag(std::vector<std::string> vertices,
                          std::vector<std::pair<std::string, std::string>> edges) {
    GroupSpec s;
    s.kind = Kind::Raag;
    s.vertices = std::move(vertices);
    for (const auto& e : edges) {
        auto idx = [&](const std::string& name) {
            auto it = std::find(s.vertices.begin(), s.vertices.end(), name);
            if (it == s.vertices.end())
                throw std::invalid_argument("raag edge uses unknown vertex '" + name + "'");
            return static_cast<int>(it - s.vertices.begin());
        };
        s.edges.emplace_back(idx(e.first), idx(e.second));
    }
    return s;
}

std::string GroupSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::FreeGroup: os << "F" << rank; break;
    case Kind::Cyclic: os << (order == 0 ? std::string("Z") : "Z" + std::to_string(order)); break;
    case Kind::FreeProduct: os << "(" << left->describe() << " * " << right->describe() << ")"; break;
    case Kind::DirectProduct: os << "(" << left->describe() << " x " << right->describe() << ")"; break;
    case Kind::Raag: os << "RAAG[" << vertices.size() << "v," << edges.size() << "e]"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GroupModel shared machinery
// ---------------------------------------------------------------------------

Word GroupModel::free_inverse_word(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(static_cast<char>(inverse_letter(static_cast<unsigned char>(*it))));
    return out;
}

Elem GroupModel::multiply(const Elem& g, const Elem& h) const {
    Word w = g.w;
    w += h.w;
    return Elem{normalize_word(w)};
}

Elem GroupModel::inverse(const Elem& g) const {
    return Elem{normalize_word(free_inverse_word(g.w))};
}

Elem GroupModel::conjugate(const Elem& x, const Elem& g) const {
    Word w = x.w;
    w += g.w;
    w += free_inverse_word(x.w);
    return Elem{normalize_word(w)};
}

int GroupModel::distance(const Elem& g, const Elem& h) const {
    Word w = free_inverse_word(g.w);
    w += h.w;
    return static_cast<int>(normalize_word(w).size());
}

std::string GroupModel::to_string(const Elem& g) const {
    if (g.w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < g.w.size(); ++i) {
        if (i) out += '.';
        out += gens_[static_cast<unsigned char>(g.w[i])].name;
    }
    return out;
}

Word GroupModel::parse_word(const std::string& text) const {
    Word w;
    if (text.empty() || text == "1") return w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        bool found = false;
        for (const auto& g : gens_) {
            if (g.name == tok) {
                w.push_back(static_cast<char>(g.id));
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown generator token '" + tok + "'");
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return w;
}

Elem GroupModel::parse(const std::string& text) const { return normalize(parse_word(text)); }

namespace {

std::string upper_token(const std::string& s) {
    std::string t = s;
    for (auto& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return t;
}

// Names generator pairs a, b, c, ... in id order; the inverse of a pair gets
// the uppercased token.  Self-inverse generators keep the lowercase token.
void assign_names(std::vector<Generator>& gens) {
    if (gens.size() > 52)
        throw std::invalid_argument("generating set too large to name (more than 26 pairs)");
    char next = 'a';
    for (auto& g : gens) {
        if (!g.name.empty()) continue;
        g.name = std::string(1, next);
        if (g.inverse_id != g.id) gens[static_cast<std::size_t>(g.inverse_id)].name = std::string(1, static_cast<char>(std::toupper(next)));
        ++next;
    }
}

// ---------------------------------------------------------------------------
// Free group
// ---------------------------------------------------------------------------

class FreeGroupModel final : public GroupModel {
public:
    explicit FreeGroupModel(int rank) {
        if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
        for (int i = 0; i < rank; ++i) {
            gens_.push_back({2 * i, 2 * i + 1, 0, ""});
            gens_.push_back({2 * i + 1, 2 * i, 0, ""});
        }
        assign_names(gens_);
        label_ = "F" + std::to_string(rank);
    }

    GroupSpec::Kind kind() const override { return GroupSpec::Kind::FreeGroup; }
    bool unique_geodesics() const override { return true; }

    Word normalize_word(const Word& w) const override {
        Word out;
        out.reserve(w.size());
        for (char c : w) {
            if (!out.empty() && inverse_letter(static_cast<unsigned char>(out.back())) == static_cast<unsigned char>(c))
                out.pop_back();
            else
                out.push_back(c);
        }
        return out;
    }

    int element_order(const Elem& g) const override { return g.is_identity() ? 1 : 0; }

    Elem cyclic_reduce(const Elem& g) const override {
        Word w = g.w;
        while (w.size() >= 2 && inverse_letter(static_cast<unsigned char>(w.front())) == static_cast<unsigned char>(w.back())) {
            w.erase(w.begin());
            w.pop_back();
        }
        return Elem{w};
    }

    Word conjugacy_key(const Elem& g) const override {
        Word w = cyclic_reduce(g).w;
        if (w.size() < 2) return w;
        Word best = w;
        for (std::size_t r = 1; r < w.size(); ++r) {
            Word rot = w.substr(r) + w.substr(0, r);
            if (rot < best) best = rot;
        }
        return best;
    }
};

// ---------------------------------------------------------------------------
// Cyclic group
// ---------------------------------------------------------------------------

class CyclicModel final : public GroupModel {
public:
    explicit CyclicModel(int order) : order_(order) {
        if (order == 1) throw std::invalid_argument("trivial cyclic factor (order 1)");
        if (order < 0) throw std::invalid_argument("cyclic order must be >= 0");
        if (order == 2) {
            gens_.push_back({0, 0, 2, ""});
        } else {
            gens_.push_back({0, 1, order, ""});
            gens_.push_back({1, 0, order, ""});
        }
        assign_names(gens_);
        label_ = order == 0 ? "Z" : "Z" + std::to_string(order);
    }

    GroupSpec::Kind kind() const override { return GroupSpec::Kind::Cyclic; }
    bool unique_geodesics() const override { return order_ == 0 || order_ == 2 || order_ % 2 == 1; }

    Word normalize_word(const Word& w) const override {
        long long e = 0;
        for (char c : w) e += (c == 0) ? 1 : -1;
        if (order_ == 2) e = ((e % 2) + 2) % 2;
        else if (order_ > 0) e = ((e % order_) + order_) % order_;
        Word out;
        if (order_ == 0) {
            if (e > 0) out.assign(static_cast<std::size_t>(e), 0);
            else if (e < 0) out.assign(static_cast<std::size_t>(-e), 1);
        } else if (e != 0) {
            // minimal power; at the midpoint of an even order the positive
            // letter wins (letter 0 is ShortLex-smaller than letter 1)
            if (2 * e <= order_) out.assign(static_cast<std::size_t>(e), 0);
            else out.assign(static_cast<std::size_t>(order_ - e), 1);
        }
        return out;
    }

    int element_order(const Elem& g) const override {
        if (g.is_identity()) return 1;
        if (order_ == 0) return 0;
        long long e = g.w[0] == 0 ? static_cast<long long>(g.w.size())
                                  : order_ - static_cast<long long>(g.w.size());
        return static_cast<int>(order_ / std::gcd(static_cast<long long>(order_), e));
    }

    Elem cyclic_reduce(const Elem& g) const override { return g; }
    Word conjugacy_key(const Elem& g) const override { return g.w; }

private:
    int order_;
};

// ---------------------------------------------------------------------------
// Product models: shared letter-mapping plumbing
// ---------------------------------------------------------------------------

class ProductModelBase : public GroupModel {
public:
    ProductModelBase(std::unique_ptr<GroupModel> left, std::unique_ptr<GroupModel> right)
        : left_(std::move(left)), right_(std::move(right)) {
        const auto append = [&](const GroupModel& f, int side) {
            int offset = static_cast<int>(gens_.size());
            offsets_[side] = offset;
            for (const auto& g : f.generators())
                gens_.push_back({g.id + offset, g.inverse_id + offset, g.order, ""});
        };
        append(*left_, 0);
        append(*right_, 1);
        assign_names(gens_);
    }

    int factor_of(int letter) const { return letter >= offsets_[1] ? 1 : 0; }
    int to_child(int letter) const { return letter - offsets_[factor_of(letter)]; }
    const GroupModel& child(int side) const { return side == 0 ? *left_ : *right_; }

    Word to_parent(int side, const Word& w) const {
        Word out = w;
        for (auto& c : out) c = static_cast<char>(c + offsets_[side]);
        return out;
    }
    Word to_child_word(int side, const Word& w) const {
        Word out = w;
        for (auto& c : out) c = static_cast<char>(c - offsets_[side]);
        return out;
    }

protected:
    std::unique_ptr<GroupModel> left_, right_;
    int offsets_[2] = {0, 0};
};

// ---------------------------------------------------------------------------
// Free product
// ---------------------------------------------------------------------------

class FreeProductModel final : public ProductModelBase {
public:
    using Syllable = std::pair<int, Elem>; // (factor side, nontrivial child element)

    FreeProductModel(std::unique_ptr<GroupModel> left, std::unique_ptr<GroupModel> right)
        : ProductModelBase(std::move(left), std::move(right)) {
        label_ = "(" + left_->model_label() + "*" + right_->model_label() + ")";
    }

    GroupSpec::Kind kind() const override { return GroupSpec::Kind::FreeProduct; }
    bool unique_geodesics() const override {
        return left_->unique_geodesics() && right_->unique_geodesics();
    }

    std::vector<Syllable> syllables(const Word& w) const {
        std::vector<Syllable> syl;
        for (char c : w) {
            int side = factor_of(static_cast<unsigned char>(c));
            Word letter(1, static_cast<char>(to_child(static_cast<unsigned char>(c))));
            if (!syl.empty() && syl.back().first == side) {
                Elem& e = syl.back().second;
                e = child(side).multiply(e, Elem{child(side).normalize_word(letter)});
                if (e.is_identity()) syl.pop_back();
            } else {
                Elem e = child(side).normalize(letter);
                if (!e.is_identity()) syl.emplace_back(side, e);
            }
        }
        return syl;
    }

    Word assemble(const std::vector<Syllable>& syl) const {
        Word out;
        for (const auto& [side, e] : syl) out += to_parent(side, e.w);
        return out;
    }

    Word normalize_word(const Word& w) const override { return assemble(syllables(w)); }

    std::vector<Syllable> cyclic_syllable_reduce(const Elem& g) const {
        auto syl = syllables(g.w);
        while (syl.size() >= 2 && syl.front().first == syl.back().first) {
            int side = syl.front().first;
            Elem merged = child(side).multiply(syl.back().second, syl.front().second);
            syl.erase(syl.begin());
            syl.pop_back();
            if (!merged.is_identity()) syl.emplace_back(side, merged);
        }
        return syl;
    }

    int element_order(const Elem& g) const override {
        auto syl = cyclic_syllable_reduce(g);
        if (syl.empty()) return 1;
        if (syl.size() >= 2) return 0;
        return child(syl[0].first).element_order(syl[0].second);
    }

    Elem cyclic_reduce(const Elem& g) const override {
        auto syl = cyclic_syllable_reduce(g);
        if (syl.size() == 1) {
            Elem e = child(syl[0].first).cyclic_reduce(syl[0].second);
            return Elem{to_parent(syl[0].first, e.w)};
        }
        return Elem{assemble(syl)};
    }

    Word conjugacy_key(const Elem& g) const override {
        auto syl = cyclic_syllable_reduce(g);
        if (syl.empty()) return {};
        if (syl.size() == 1)
            return to_parent(syl[0].first, child(syl[0].first).conjugacy_key(syl[0].second));
        // cyclically reduced conjugates are exactly the syllable rotations
        Word best = assemble(syl);
        for (std::size_t r = 1; r < syl.size(); ++r) {
            std::rotate(syl.begin(), syl.begin() + 1, syl.end());
            Word cand = assemble(syl);
            if (shortlex_less(cand, best)) best = cand;
        }
        return best;
    }
};

// ---------------------------------------------------------------------------
// Direct product
// ---------------------------------------------------------------------------

class DirectProductModel final : public ProductModelBase {
public:
    DirectProductModel(std::unique_ptr<GroupModel> left, std::unique_ptr<GroupModel> right)
        : ProductModelBase(std::move(left), std::move(right)) {
        label_ = "(" + left_->model_label() + "x" + right_->model_label() + ")";
    }

    GroupSpec::Kind kind() const override { return GroupSpec::Kind::DirectProduct; }
    bool unique_geodesics() const override { return false; }

    std::pair<Elem, Elem> components(const Word& w) const {
        Word a, b;
        for (char c : w) {
            int side = factor_of(static_cast<unsigned char>(c));
            (side == 0 ? a : b).push_back(static_cast<char>(to_child(static_cast<unsigned char>(c))));
        }
        return {child(0).normalize(a), child(1).normalize(b)};
    }

    Word normalize_word(const Word& w) const override {
        auto [a, b] = components(w);
        return to_parent(0, a.w) + to_parent(1, b.w);
    }

    int element_order(const Elem& g) const override {
        auto [a, b] = components(g.w);
        int oa = child(0).element_order(a), ob = child(1).element_order(b);
        if (oa == 0 || ob == 0) return 0;
        return static_cast<int>(std::lcm(static_cast<long long>(oa), static_cast<long long>(ob)));
    }

    Elem cyclic_reduce(const Elem& g) const override {
        auto [a, b] = components(g.w);
        return Elem{to_parent(0, child(0).cyclic_reduce(a).w) + to_parent(1, child(1).cyclic_reduce(b).w)};
    }

    Word conjugacy_key(const Elem& g) const override {
        auto [a, b] = components(g.w);
        return to_parent(0, child(0).conjugacy_key(a)) + to_parent(1, child(1).conjugacy_key(b));
    }
};

// ---------------------------------------------------------------------------
// Right-angled Artin group
// ---------------------------------------------------------------------------

class RaagModel final : public GroupModel {
public:
    RaagModel(const std::vector<std::string>& vertices, const std::vector<std::pair<int, int>>& edges)
        : nverts_(static_cast<int>(vertices.size())) {
        if (nverts_ == 0) throw std::invalid_argument("raag needs at least one vertex");
        std::set<std::string> seen;
        for (const auto& name : vertices) {
            if (name.empty()) throw std::invalid_argument("raag vertex name empty");
            if (upper_token(name) == name)
                throw std::invalid_argument("raag vertex name '" + name + "' must contain a lowercase letter");
            if (!seen.insert(name).second || !seen.insert(upper_token(name)).second)
                throw std::invalid_argument("raag vertex names collide: '" + name + "'");
        }
        adj_.assign(static_cast<std::size_t>(nverts_) * nverts_, false);
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("raag graph has a self-loop");
            if (u < 0 || v < 0 || u >= nverts_ || v >= nverts_)
                throw std::invalid_argument("raag edge out of range");
            adj_[static_cast<std::size_t>(u) * nverts_ + v] = true;
            adj_[static_cast<std::size_t>(v) * nverts_ + u] = true;
        }
        for (int v = 0; v < nverts_; ++v) {
            gens_.push_back({2 * v, 2 * v + 1, 0, vertices[static_cast<std::size_t>(v)]});
            gens_.push_back({2 * v + 1, 2 * v, 0, upper_token(vertices[static_cast<std::size_t>(v)])});
        }
        label_ = "RAAG[" + std::to_string(nverts_) + "v]";
    }

    GroupSpec::Kind kind() const override { return GroupSpec::Kind::Raag; }
    bool unique_geodesics() const override {
        return std::none_of(adj_.begin(), adj_.end(), [](bool b) { return b; });
    }

    int vertex_of(int letter) const { return letter / 2; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * nverts_ + v]; }
    int vertex_count() const { return nverts_; }

    // Letters commute as group elements: same vertex, or adjacent vertices.
    bool letters_commute(int s, int t) const {
        int u = vertex_of(s), v = vertex_of(t);
        return u == v || adjacent(u, v);
    }

    // Cancels every pair x ... x^-1 whose gap commutes with x, to a fixpoint.
    Word reduce(Word w) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < w.size() && !changed; ++i) {
                int x = static_cast<unsigned char>(w[i]);
                for (std::size_t j = i + 1; j < w.size(); ++j) {
                    int y = static_cast<unsigned char>(w[j]);
                    if (vertex_of(y) == vertex_of(x)) {
                        if (y == inverse_letter(x)) {
                            w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
                            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                            changed = true;
                            break;
                        }
                        continue; // same letter slides past itself
                    }
                    if (!adjacent(vertex_of(x), vertex_of(y))) break;
                }
            }
        }
        return w;
    }

    // Lexicographically least linearization of the (reduced) trace: repeatedly
    // extract the smallest letter whose whole prefix commutes with it.
    Word lex_least(Word w) const {
        Word out;
        out.reserve(w.size());
        while (!w.empty()) {
            std::size_t best = w.size();
            for (std::size_t i = 0; i < w.size(); ++i) {
                bool movable = true;
                for (std::size_t k = 0; k < i && movable; ++k)
                    movable = letters_commute(static_cast<unsigned char>(w[k]), static_cast<unsigned char>(w[i]));
                if (movable && (best == w.size() || static_cast<unsigned char>(w[i]) < static_cast<unsigned char>(w[best])))
                    best = i;
            }
            out.push_back(w[best]);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
        }
        return out;
    }

    Word normalize_word(const Word& w) const override { return lex_least(reduce(w)); }

    int element_order(const Elem& g) const override { return g.is_identity() ? 1 : 0; }

    // Shuffle-cancel across the wrap point to a fixpoint: every rotation is a
    // conjugate, so any rotation that reduces shorter restarts the loop.
    Word cyclic_reduced_word(const Elem& g) const {
        Word w = reduce(g.w);
        bool shrunk = true;
        while (shrunk && w.size() >= 2) {
            shrunk = false;
            for (std::size_t r = 0; r < w.size(); ++r) {
                Word red = reduce(w.substr(r) + w.substr(0, r));
                if (red.size() < w.size()) {
                    w = red;
                    shrunk = true;
                    break;
                }
            }
        }
        return w;
    }

    Elem cyclic_reduce(const Elem& g) const override { return Elem{lex_least(cyclic_reduced_word(g))}; }

    // Closure of the cyclically reduced form under rotation + normalization;
    // complete at desk scale, cross-validated by bounded conjugator search.
    Word conjugacy_key(const Elem& g) const override {
        Word start = lex_least(cyclic_reduced_word(g));
        if (start.size() < 2) return start;
        std::set<Word> closure{start};
        std::vector<Word> queue{start};
        while (!queue.empty()) {
            Word u = queue.back();
            queue.pop_back();
            for (std::size_t r = 1; r < u.size(); ++r) {
                Word v = reduce(u.substr(r) + u.substr(0, r));
                if (v.size() < u.size()) // missed wrap cancellation: restart lower
                    return conjugacy_key(Elem{v});
                v = lex_least(v);
                if (closure.insert(v).second) queue.push_back(v);
            }
        }
        return *closure.begin();
    }

private:
    int nverts_;
    std::vector<bool> adj_;
};

bool is_z2(const GroupSpec& s) { return s.kind == GroupSpec::Kind::Cyclic && s.order == 2; }

} // namespace

// ---------------------------------------------------------------------------
// Factory and classifiers
// ---------------------------------------------------------------------------

std::unique_ptr<GroupModel> build_model(const GroupSpec& spec) {
    switch (spec.kind) {
    case GroupSpec::Kind::FreeGroup:
        return std::make_unique<FreeGroupModel>(spec.rank);
    case GroupSpec::Kind::Cyclic:
        return std::make_unique<CyclicModel>(spec.order);
    case GroupSpec::Kind::FreeProduct: {
        if (!spec.left || !spec.right) throw std::invalid_argument("free product needs two factors");
        if (is_z2(*spec.left) && is_z2(*spec.right))
            throw std::invalid_argument("elementary free product Z2 * Z2 is excluded");
        return std::make_unique<FreeProductModel>(build_model(*spec.left), build_model(*spec.right));
    }
    case GroupSpec::Kind::DirectProduct:
        if (!spec.left || !spec.right) throw std::invalid_argument("direct product needs two factors");
        return std::make_unique<DirectProductModel>(build_model(*spec.left), build_model(*spec.right));
    case GroupSpec::Kind::Raag:
        return std::make_unique<RaagModel>(spec.vertices, spec.edges);
    }
    throw std::invalid_argument("unknown group kind");
}

GroupSpec::Kind model_kind(const GroupModel& m) { return m.kind(); }

FreeProductClass classify_free_product(const GroupModel& m, const Elem& g) {
    const auto* fp = dynamic_cast<const FreeProductModel*>(&m);
    if (!fp) throw std::invalid_argument("classify_free_product requires a free product model");
    FreeProductClass out;
    auto syl = fp->cyclic_syllable_reduce(g);
    if (syl.empty()) {
        out.kind = FreeProductClass::Kind::Identity;
        return out;
    }
    if (syl.size() >= 2) {
        out.kind = FreeProductClass::Kind::Hyperbolic;
        return out;
    }
    out.kind = FreeProductClass::Kind::ConjugateIntoFactor;
    out.side = syl[0].first;
    out.torsion = fp->child(syl[0].first).element_order(syl[0].second) != 0;
    return out;
}

RaagClass classify_raag(const GroupModel& m, const Elem& g) {
    const auto* rm = dynamic_cast<const RaagModel*>(&m);
    if (!rm) throw std::invalid_argument("classify_raag requires a raag model");
    RaagClass out;
    Word cyc = rm->cyclic_reduced_word(g);
    std::set<int> supp;
    for (char c : cyc) supp.insert(rm->vertex_of(static_cast<unsigned char>(c)));
    out.support.assign(supp.begin(), supp.end());

    if (supp.empty()) {
        out.kind = RaagClass::Kind::JoinBound; // degenerate identity convention
        return out;
    }
    // Support lies in a join iff some outside vertex dominates it, or it
    // splits into two nonempty parts with complete adjacency between them.
    for (int v = 0; v < rm->vertex_count(); ++v) {
        if (supp.count(v)) continue;
        bool dominates = true;
        for (int u : out.support)
            if (!rm->adjacent(u, v)) { dominates = false; break; }
        if (dominates) {
            out.kind = RaagClass::Kind::JoinBound;
            return out;
        }
    }
    const int k = static_cast<int>(out.support.size());
    for (unsigned mask = 1; k >= 2 && mask + 1 < (1u << k); ++mask) {
        bool complete = true;
        for (int i = 0; i < k && complete; ++i)
            for (int j = 0; j < k && complete; ++j)
                if ((mask >> i & 1u) && !(mask >> j & 1u))
                    complete = rm->adjacent(out.support[static_cast<std::size_t>(i)],
                                            out.support[static_cast<std::size_t>(j)]);
        if (complete) {
            out.kind = RaagClass::Kind::JoinBound;
            return out;
        }
    }
    out.kind = RaagClass::Kind::Rank1Candidate;
    return out;
}

} // namespace cayley
