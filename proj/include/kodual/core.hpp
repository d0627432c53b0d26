#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace kodual {

/// Subset of an indexed carrier. Bit i is set iff element i is a member.
using Subset = boost::dynamic_bitset<>;
using Index = std::size_t;

Subset empty_subset(std::size_t n);
Subset full_subset(std::size_t n);
Subset singleton(std::size_t n, Index i);
Subset subset_of(std::size_t n, const std::vector<Index>& members);
std::vector<Index> members(const Subset& s);

/// Lexicographic order on the sorted member lists (so the empty set comes first).
bool subset_less(const Subset& a, const Subset& b);
void sort_unique(std::vector<Subset>& family);

/// Identifier order used everywhere: digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

/// Renders "{a,b}" with members in carrier order.
std::string set_name(const Subset& s, const std::vector<std::string>& names);

/// Returns the positions of `names` listed in natural order; throws on duplicates.
std::vector<Index> sorted_positions(const std::vector<std::string>& names);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input rejected before any work was done.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Enumeration refused because the instance exceeds a size limit.
class GuardrailError : public Error {
public:
    using Error::Error;
};

/// A checked theorem failed; this always indicates a bug.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

struct Diagnostic {
    std::string code;     // axiom or condition label, e.g. "S3"
    std::string message;  // human readable, includes the witness
};
using Diagnostics = std::vector<Diagnostic>;

std::string format_diagnostics(const Diagnostics& d);

/// A validated value or the list of reasons it was rejected.
template <class T>
class Result {
public:
    Result(T value) : data_(std::move(value)) {}
    Result(Diagnostics d) : data_(std::move(d)) {}
    Result(Diagnostic d) : data_(Diagnostics{std::move(d)}) {}

    bool ok() const { return std::holds_alternative<T>(data_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        check();
        return std::get<T>(data_);
    }
    T&& value() && {
        check();
        return std::get<T>(std::move(data_));
    }
    const Diagnostics& diagnostics() const {
        static const Diagnostics none;
        return ok() ? none : std::get<Diagnostics>(data_);
    }

private:
    void check() const {
        if (!ok()) throw Error(format_diagnostics(std::get<Diagnostics>(data_)));
    }
    std::variant<T, Diagnostics> data_;
};

/// Largest carrier accepted by enumerations of all upsets or all subsets.
inline constexpr std::size_t kMaxEnumeratedElements = 20;
/// Largest family accepted by literal subfamily enumeration.
inline constexpr std::size_t kMaxEnumeratedFamily = 16;

}  // namespace kodual
