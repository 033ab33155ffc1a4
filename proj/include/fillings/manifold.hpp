#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fillings/slope.hpp"

namespace fl {

struct Fiber {
    i64 alpha = 1;
    i64 beta = 0;
    auto operator<=>(const Fiber&) const = default;
};

enum class Base { disk, sphere };

struct SeifertPiece {
    Base base = Base::sphere;
    std::vector<Fiber> fibers;
    i64 euler = 0;  // integral framing b

    std::vector<i64> orders() const;  // sorted alphas >= 2
    bool operator==(const SeifertPiece&) const = default;
};

// (s_R, h_R) = [[a, b], [c, d]] (s_L, h_L) on the gluing torus
struct Gluing {
    i64 a = 0, b = 1, c = 1, d = 0;
    bool operator==(const Gluing&) const = default;
};

struct ManifoldDesc;

struct S3 {
    bool operator==(const S3&) const = default;
};
struct S2xS1 {
    bool operator==(const S2xS1&) const = default;
};
struct Lens {
    i64 p = 1;
    i64 q = 0;
    bool operator==(const Lens&) const = default;
};
struct SFS {
    SeifertPiece piece;
    bool operator==(const SFS&) const = default;
};
struct TorusUnion {
    SeifertPiece left, right;
    i64 fiber_delta = 0;
    std::optional<Gluing> gluing;
    bool operator==(const TorusUnion&) const = default;
};
struct ConnSum {
    std::vector<ManifoldDesc> parts;
    bool operator==(const ConnSum&) const;
};

struct ManifoldDesc {
    std::variant<S3, S2xS1, Lens, SFS, TorusUnion, ConnSum> v;

    template <class T>
    bool is() const { return std::holds_alternative<T>(v); }
    template <class T>
    const T& as() const { return std::get<T>(v); }
    bool operator==(const ManifoldDesc&) const = default;
};

struct ClassificationReport {
    bool is_reducible = false;
    bool is_lens = false;
    bool is_seifert = false;
    bool is_toroidal = false;
    bool is_prime = false;
    bool contains_klein_bottle = false;
    bool operator==(const ClassificationReport&) const = default;
};

// canonicalizing constructors
ManifoldDesc make_lens(i64 p, i64 q);
ManifoldDesc make_sfs(std::vector<Fiber> fibers, i64 euler);  // base sphere; merges to lens / ConnSum
ManifoldDesc make_connsum(std::vector<ManifoldDesc> parts);
SeifertPiece make_disk_piece(std::vector<Fiber> fibers, i64 euler);

// moves every beta into [0, alpha) and drops alpha == 1 fibers into euler
SeifertPiece normalized(SeifertPiece piece);

std::optional<i64> h1_order(const ManifoldDesc& m);  // nullopt: TorusUnion with no gluing; 0: infinite
ManifoldDesc sfs_to_lens(const SeifertPiece& piece);
bool lens_homeo(const Lens& a, const Lens& b);
ClassificationReport classify(const ManifoldDesc& m);

// classify + h1 + lens_homeo + order-multiset level comparison
bool equivalent(const ManifoldDesc& a, const ManifoldDesc& b);

std::string to_string(const ManifoldDesc& m);
std::string describe(const ManifoldDesc& m);  // with coefficient pairs
std::string to_string(const ClassificationReport& r);

// signed representative of q in (-p/2, p/2]
i64 lens_q_display(const Lens& l);

}  // namespace fl
