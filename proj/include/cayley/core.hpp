#ifndef CAYLEY_CORE_HPP
#define CAYLEY_CORE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

// A word is a sequence of generator ids, one byte per letter.  Letter values
// index into GroupModel::generators().  Lexicographic comparison of words is
// therefore comparison of id sequences, and ShortLex is (size, lex).
using Word = std::string;

inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct Generator {
    int id = -1;
    int inverse_id = -1;
    int order = 0;          // order of the generator as a group element; 0 = infinite
    std::string name;       // lowercase token; inverse serializes as the uppercased token
};

// Element in canonical form.  The normal form is always the ShortLex-least
// geodesic word for the element, so normal_form().size() is the exact word
// length d(o, g o).
struct Elem {
    Word w;

    std::size_t length() const { return w.size(); }
    bool is_identity() const { return w.empty(); }

    friend bool operator==(const Elem& a, const Elem& b) { return a.w == b.w; }
    friend bool operator!=(const Elem& a, const Elem& b) { return a.w != b.w; }
    friend bool operator<(const Elem& a, const Elem& b) { return shortlex_less(a.w, b.w); }
};

// Finite explicit point set (orbit points identified with group elements).
struct PointSet {
    std::vector<Elem> points;
    std::string label;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

// Thrown when an enumeration hits its configured resource cap.  Carries the
// partial counts accumulated so far so an abort is still informative.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::vector<std::uint64_t> partial_counts = {})
        : std::runtime_error(what), partial(std::move(partial_counts)) {}
    std::vector<std::uint64_t> partial;
};

// Thrown when a cross-validated quantity disagrees with its independent
// recomputation (e.g. a cyclic-reduction length contradicted by brute-force
// conjugator search).  Never caught silently.
class invariant_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

} // namespace cayley

#endif
