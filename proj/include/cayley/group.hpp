#ifndef CAYLEY_GROUP_HPP
#define CAYLEY_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "cayley/core.hpp"

namespace cayley {

// ---------------------------------------------------------------------------
// Group specifications
// ---------------------------------------------------------------------------

struct GroupSpec {
    enum class Kind { FreeGroup, Cyclic, FreeProduct, DirectProduct, Raag };

    Kind kind = Kind::FreeGroup;
    int rank = 0;   // FreeGroup
    int order = 0;  // Cyclic (0 = infinite cyclic)
    std::shared_ptr<GroupSpec> left, right;          // products
    std::vector<std::string> vertices;               // Raag
    std::vector<std::pair<int, int>> edges;          // Raag, vertex indices, adjacency = commutation

    static GroupSpec free_group(int rank);
    static GroupSpec cyclic(int order);
    static GroupSpec free_product(GroupSpec a, GroupSpec b);
    static GroupSpec direct_product(GroupSpec a, GroupSpec b);
    static GroupSpec raag(std::vector<std::string> vertices,
                          std::vector<std::pair<std::string, std::string>> edges);

    std::string describe() const;
};

// ---------------------------------------------------------------------------
// Group models
// ---------------------------------------------------------------------------

// A computable group with a symmetric generating set, exact word metric and
// canonical normal forms.  The normal form of every element is the
// ShortLex-least geodesic word over the model's letters; all derived
// operations (length, multiplication, distance, enumeration) rest on that.
// Models are immutable after construction and safe to share across threads.
class GroupModel {
public:
    virtual ~GroupModel() = default;

    const std::vector<Generator>& generators() const { return gens_; }
    int alphabet_size() const { return static_cast<int>(gens_.size()); }
    int inverse_letter(int s) const { return gens_[static_cast<std::size_t>(s)].inverse_id; }
    const std::string& model_label() const { return label_; }

    // Canonical form of an arbitrary word over the model's letters.
    virtual Word normalize_word(const Word& w) const = 0;

    Elem normalize(const Word& w) const { return Elem{normalize_word(w)}; }
    Elem identity() const { return Elem{}; }

    Elem multiply(const Elem& g, const Elem& h) const;
    Elem inverse(const Elem& g) const;
    Elem conjugate(const Elem& x, const Elem& g) const; // x g x^-1

    // Exact geodesic word length d(o, g o).
    int length(const Elem& g) const { return static_cast<int>(g.w.size()); }
    // Exact distance d(g o, h o) = |g^-1 h|.
    int distance(const Elem& g, const Elem& h) const;

    // Order of g as a group element, 0 meaning infinite.  Exact.
    virtual int element_order(const Elem& g) const = 0;

    // True when every element has a unique geodesic word, in which case
    // sphere-by-sphere enumeration needs no deduplication.
    virtual bool unique_geodesics() const = 0;

    virtual GroupSpec::Kind kind() const = 0;

    // Cyclically reduced representative of the conjugacy class of g, obtained
    // by the model's reduction rule.  Its length is ell^o([g]).
    virtual Elem cyclic_reduce(const Elem& g) const = 0;

    // Canonical key word shared by exactly the members of [g] (model-specific
    // cyclic normal form; for RAAGs complete at desk scale and cross-validated
    // elsewhere by bounded conjugator search).
    virtual Word conjugacy_key(const Elem& g) const = 0;

    // Serialization: dot-separated generator tokens, uppercase = inverse,
    // identity = "1".
    std::string to_string(const Elem& g) const;
    Elem parse(const std::string& text) const;
    Word parse_word(const std::string& text) const;

    // Letterwise formal inverse (reverse + inverse letters); not normalized.
    Word free_inverse_word(const Word& w) const;

protected:
    std::vector<Generator> gens_;
    std::string label_;
};

// Builds the model for a well-formed spec.  Rejects the elementary free
// product Z2 * Z2, trivial factors and malformed RAAG graphs.
std::unique_ptr<GroupModel> build_model(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Per-model algebraic classifiers
// ---------------------------------------------------------------------------

// Classification of an element of a free product by its cyclic syllable form.
// kind == ConjugateIntoFactor covers torsion elements as well; `torsion`
// reports whether the surviving syllable has finite order.
struct FreeProductClass {
    enum class Kind { Identity, ConjugateIntoFactor, Hyperbolic };
    Kind kind = Kind::Identity;
    int side = -1;      // 0 = left factor, 1 = right factor
    bool torsion = false;
};

FreeProductClass classify_free_product(const GroupModel& m, const Elem& g);

// Support criterion for rank-1 candidates in a RAAG: JoinBound when the
// support of the cyclically reduced form lies inside some join subgraph of
// the defining graph (identity included by convention).  Advisory; must be
// cross-validated against the contraction tester.
struct RaagClass {
    enum class Kind { Rank1Candidate, JoinBound };
    Kind kind = Kind::JoinBound;
    std::vector<int> support; // vertex indices of the cyclically reduced form
};

RaagClass classify_raag(const GroupModel& m, const Elem& g);

// Model-kind probes used by classifiers and the CLI.
GroupSpec::Kind model_kind(const GroupModel& m);

} // namespace cayley

#endif
