#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "valence/alphabet.hpp"

namespace valence {

// ---------------------------------------------------------------------------
// Monoid descriptors
// ---------------------------------------------------------------------------

enum class MonoidKind { Trivial, FreeGroup, Polycyclic, FreeAbelian, Product };

/// Names one of the supported register monoids: the trivial monoid, a free
/// group F(X), a polycyclic monoid P(X), a free abelian group Z^n, or a flat
/// direct product of non-product factors.
class MonoidSpec {
public:
    static MonoidSpec trivial();
    static MonoidSpec free_group(Alphabet generators);
    static MonoidSpec polycyclic(Alphabet generators);
    /// Generator names default to "c0".."c<n-1>" when none are given.
    static MonoidSpec free_abelian(std::size_t rank, std::optional<Alphabet> names = {});
    /// Factors must themselves be non-product.
    static MonoidSpec product(std::vector<MonoidSpec> factors);
    /// Product of two specs, flattening product factors on either side.
    static MonoidSpec product_of(const MonoidSpec& lhs, const MonoidSpec& rhs);

    MonoidKind kind() const { return kind_; }
    bool is_product() const { return kind_ == MonoidKind::Product; }

    /// Generator alphabet of a non-product spec (empty for Trivial).
    const Alphabet& generator_alphabet() const;
    std::size_t rank() const;  // FreeAbelian only
    const std::vector<MonoidSpec>& factors() const;

    /// Number of multiplier parts an edge carries: #factors for products, 1
    /// otherwise.
    std::size_t arity() const;
    /// Factor spec at position i (itself for non-products with i == 0).
    const MonoidSpec& factor(std::size_t i) const;

    bool operator==(const MonoidSpec&) const;

private:
    MonoidSpec() = default;
    MonoidKind kind_ = MonoidKind::Trivial;
    Alphabet alphabet_;                   // FreeGroup / Polycyclic / FreeAbelian
    std::size_t rank_ = 0;                // FreeAbelian
    std::vector<MonoidSpec> factors_;     // Product
};

// ---------------------------------------------------------------------------
// Register element values (normal forms)
// ---------------------------------------------------------------------------

/// A freely reduced word: no factor xx^-1 or x^-1x occurs.
class FreeGroupElement {
public:
    explicit FreeGroupElement(Alphabet alphabet) : reduced_(std::move(alphabet)) {}
    /// Wraps an already-reduced word; throws PreconditionError otherwise.
    explicit FreeGroupElement(SignedWord reduced);

    const Alphabet& alphabet() const { return reduced_.alphabet(); }
    const SignedWord& word() const { return reduced_; }
    bool is_identity() const { return reduced_.empty(); }
    std::size_t length() const { return reduced_.size(); }

    bool operator==(const FreeGroupElement&) const = default;
    auto operator<=>(const FreeGroupElement&) const = default;

private:
    SignedWord reduced_;
};

/// An element of P(X): either Zero (the empty partial function) or a pair
/// (pop, push) of positive words denoting the partial map w·pop ↦ w·push
/// (stack top at the right; pop is consumed right-to-left).
class PolycyclicElement {
public:
    static PolycyclicElement identity(Alphabet alphabet);
    static PolycyclicElement zero(Alphabet alphabet);
    static PolycyclicElement pair(Alphabet alphabet, Word pop, Word push);

    const Alphabet& alphabet() const { return alphabet_; }
    bool is_zero() const { return zero_; }
    bool is_identity() const { return !zero_ && pop_.empty() && push_.empty(); }
    const Word& pop() const;
    const Word& push() const;

    bool operator==(const PolycyclicElement&) const = default;
    auto operator<=>(const PolycyclicElement&) const = default;

private:
    PolycyclicElement() = default;
    Alphabet alphabet_;
    bool zero_ = false;
    Word pop_, push_;
};

/// An element of Z^n. Components are checked 64-bit integers; overflow
/// throws rather than wrapping.
class IntVector {
public:
    explicit IntVector(std::size_t rank) : components_(rank, 0) {}
    explicit IntVector(std::vector<std::int64_t> components)
        : components_(std::move(components)) {}

    std::size_t rank() const { return components_.size(); }
    const std::vector<std::int64_t>& components() const { return components_; }
    bool is_identity() const;

    bool operator==(const IntVector&) const = default;
    auto operator<=>(const IntVector&) const = default;

private:
    std::vector<std::int64_t> components_;
};

struct TrivialElement {
    bool operator==(const TrivialElement&) const = default;
    auto operator<=>(const TrivialElement&) const = default;
};

class RegisterElement;

/// One normal-form value per factor of a product monoid.
class ProductElement {
public:
    explicit ProductElement(std::vector<RegisterElement> parts);

    std::size_t arity() const;
    const std::vector<RegisterElement>& parts() const { return parts_; }

    bool operator==(const ProductElement&) const;

private:
    std::vector<RegisterElement> parts_;
};

/// Normal-form value of any supported register monoid.
class RegisterElement {
public:
    RegisterElement() : value_(TrivialElement{}) {}
    RegisterElement(TrivialElement v) : value_(std::move(v)) {}
    RegisterElement(FreeGroupElement v) : value_(std::move(v)) {}
    RegisterElement(PolycyclicElement v) : value_(std::move(v)) {}
    RegisterElement(IntVector v) : value_(std::move(v)) {}
    RegisterElement(ProductElement v) : value_(std::move(v)) {}

    template <class T>
    bool holds() const { return std::holds_alternative<T>(value_); }
    template <class T>
    const T& get() const { return std::get<T>(value_); }

    bool operator==(const RegisterElement&) const;

private:
    std::variant<TrivialElement, FreeGroupElement, PolycyclicElement, IntVector,
                 ProductElement>
        value_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// The unique freely reduced form of w; ε exactly when w is 2-sided Dyck.
FreeGroupElement free_reduce(const SignedWord& w);

FreeGroupElement fg_multiply(const FreeGroupElement& a, const FreeGroupElement& b);
FreeGroupElement fg_invert(const FreeGroupElement& a);

/// Left-to-right product of generator actions: x pushes, x^-1 pops. Zero
/// exactly when the composed partial function is empty.
PolycyclicElement poly_eval(const SignedWord& w);

PolycyclicElement poly_multiply(const PolycyclicElement& a, const PolycyclicElement& b);

IntVector zn_add(const IntVector& a, const IntVector& b);
/// Signed generator counts of w with respect to the rank-n name alphabet.
IntVector zn_eval(const Alphabet& names, const SignedWord& w);

ProductElement product_multiply(const ProductElement& a, const ProductElement& b);

bool is_identity(const RegisterElement& e);
/// True only for polycyclic Zero (and for products with a Zero part); groups
/// have no zero.
bool is_zero(const RegisterElement& e);

RegisterElement identity_of(const MonoidSpec& spec);
/// Multiplies two elements of the same monoid; dispatches on the held kind.
RegisterElement multiply(const RegisterElement& a, const RegisterElement& b);
/// Evaluates one generator word per factor to a normal-form element.
RegisterElement evaluate(const MonoidSpec& spec, std::span<const SignedWord> parts);

/// Normal-form size used by search budgets: reduced length for F(X),
/// |pop|+|push| for P(X), max |component| for Z^n, max over parts for
/// products.
std::size_t normal_form_size(const RegisterElement& e);

/// Canonical key string; equal keys iff equal elements. Used for
/// configuration deduplication.
std::string register_key(const RegisterElement& e);

}  // namespace valence
