#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fillings/manifold.hpp"
#include "fillings/montesinos.hpp"
#include "fillings/slope.hpp"

namespace fl {

// nullopt is the star (unfilled slot)
using Slot = std::optional<Slope>;

struct QFilling {
    Slot theta, phi, omega, pi;
    bool filled() const { return theta && phi && omega && pi; }
    bool operator==(const QFilling&) const = default;
};

struct PentangleFilling {
    std::array<Slot, 5> slots;
    bool operator==(const PentangleFilling&) const = default;
};

class OutsideFamily : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

QFilling make_q(Slot theta, Slot phi, Slot omega, Slot pi);
QFilling parse_q(std::string_view text);  // "Q(2,-5,1/-3,-1/3)", "*" for a star
std::string to_string(const QFilling& f);
std::string to_string(const PentangleFilling& f);

PentangleFilling q_to_pentangle(const QFilling& f);
QFilling pentangle_to_q(const PentangleFilling& p);  // third slot must be 1/2

// closed forms of the filled template that apply to f, in table order
struct CoverForm {
    std::string shape;
    ArborescentLink link;
};
std::vector<CoverForm> cover_forms(const QFilling& f);

// first applicable form; throws OutsideFamily when none applies, invalid_argument on a star
CoverForm cover_form(const QFilling& f);
ManifoldDesc cover_Q(const QFilling& f);

struct Admissibility {
    bool accepted = false;
    i64 canonical = 0;   // min(p, -p + 2) when accepted
    std::string reason;  // "klein_bottle", "excluded_slope omega=1/0", ...
};
Admissibility admissible_p(i64 p);

QFilling family_filling(i64 p, const Slope& pi);  // Q(2, p-2, 1/p, pi)
// throws std::invalid_argument carrying the rejection reason
std::pair<ManifoldDesc, ManifoldDesc> family_manifolds(i64 p);

bool verify_symmetries(const QFilling& f);

}  // namespace fl
