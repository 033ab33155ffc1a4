#include "fillings/tangle.hpp"

#include <cctype>

namespace fl {

namespace {

Slot rot_slot(const Slot& s) {
    if (!s) return s;
    return rot(*s);
}

std::string slot_string(const Slot& s) { return s ? short_string(*s) : "*"; }

const Slope kInf{1, 0};

bool is(const Slope& x, i64 p, i64 q = 1) { return x == slope(p, q); }

Slope frac(i64 p, i64 q) { return slope(p, q); }

// theta-side shapes at pi = -1/3; the phi-side shapes are the same with theta, phi swapped
std::optional<CoverForm> theta_shape(const Slope& t, const Slope& f, const Slope& w, const std::string& name) {
    if (is(t, 2))
        return CoverForm{name + "=2", {{frac(-1, 2), frac(1, 3)}, {neg(f), add(inv(w), -2)}}};
    if (is(t, 1))
        return CoverForm{name + "=1", {{frac(-1, 2), inv(add(f, 1)), neg(inv(add(inv(w), -3)))}, {}}};
    if (is(t, 0))
        return CoverForm{name + "=0", {{frac(-2, 3), inv(f), neg(inv(add(inv(w), -2)))}, {}}};
    if (is(t, -1))
        return CoverForm{name + "=-1", {{frac(1, 2), inv(add(f, -1))}, {frac(1, 2), neg(inv(add(inv(w), -1)))}}};
    if (t.is_inf())
        return CoverForm{name + "=1/0", {{inv(f), inv(add(w, -2))}, {}}};
    return std::nullopt;
}

std::optional<CoverForm> omega_shape(const Slope& t, const Slope& f, const Slope& w) {
    if (w.is_inf()) return CoverForm{"omega=1/0", {{neg(t), neg(f)}, {frac(-1, 2), frac(1, 3)}}};
    if (is(w, 1)) return CoverForm{"omega=1", {{frac(-1, 2), inv(add(t, 1)), inv(add(f, 1))}, {}}};
    if (is(w, 0)) return CoverForm{"omega=0", {{add(neg(t), 2), inv(add(f, -2))}, {}}};
    if (is(w, 1, 2)) return CoverForm{"omega=1/2", {{inv(t), inv(f), frac(-2, 3)}, {}}};
    return std::nullopt;
}

}  // namespace

QFilling make_q(Slot theta, Slot phi, Slot omega, Slot pi) { return {theta, phi, omega, pi}; }

QFilling parse_q(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.size() < 4 || (s[0] != 'Q' && s[0] != 'q') || s[1] != '(' || s.back() != ')')
        throw std::invalid_argument("expected Q(a,b,c,d): " + std::string(text));
    s = s.substr(2, s.size() - 3);
    std::vector<Slot> slots;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item == "*")
            slots.push_back(std::nullopt);
        else
            slots.push_back(parse_slope(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (slots.size() != 4) throw std::invalid_argument("Q needs four slots: " + std::string(text));
    return {slots[0], slots[1], slots[2], slots[3]};
}

std::string to_string(const QFilling& f) {
    return "Q(" + slot_string(f.theta) + "," + slot_string(f.phi) + "," + slot_string(f.omega) + "," +
           slot_string(f.pi) + ")";
}

std::string to_string(const PentangleFilling& p) {
    std::string s = "P(";
    for (std::size_t i = 0; i < 5; ++i) {
        if (i) s += ",";
        s += slot_string(p.slots[i]);
    }
    return s + ")";
}

PentangleFilling q_to_pentangle(const QFilling& f) {
    return {{rot_slot(f.theta), rot_slot(f.phi), frac(1, 2), rot_slot(f.omega), rot_slot(f.pi)}};
}

QFilling pentangle_to_q(const PentangleFilling& p) {
    if (!p.slots[2] || *p.slots[2] != frac(1, 2))
        throw std::invalid_argument("pentangle third slot must be 1/2");
    return {rot_slot(p.slots[0]), rot_slot(p.slots[1]), rot_slot(p.slots[3]), rot_slot(p.slots[4])};
}

std::vector<CoverForm> cover_forms(const QFilling& f) {
    if (!f.filled()) throw std::invalid_argument("cover_Q needs all four slots filled: " + to_string(f));
    const Slope &t = *f.theta, &ph = *f.phi, &w = *f.omega, &pi = *f.pi;
    std::vector<CoverForm> out;
    if (pi.is_inf()) {
        out.push_back({"pi=1/0", {{inv(t), inv(ph)}, {add(neg(w), 1), frac(-1, 2)}}});
        return out;
    }
    if (pi != frac(-1, 3)) return out;
    if (auto c = theta_shape(t, ph, w, "theta")) out.push_back(*c);
    if (auto c = theta_shape(ph, t, w, "phi")) out.push_back(*c);
    if (auto c = omega_shape(t, ph, w)) out.push_back(*c);
    return out;
}

CoverForm cover_form(const QFilling& f) {
    auto forms = cover_forms(f);
    if (forms.empty()) throw OutsideFamily("outside implemented family: " + to_string(f));
    return forms.front();
}

ManifoldDesc cover_Q(const QFilling& f) { return double_cover(cover_form(f).link); }

Admissibility admissible_p(i64 p) {
    Admissibility a;
    if (p >= -1 && p <= 3) {
        a.reason = "excluded_slope omega=" + short_string(slope(1, p));
        return a;
    }
    if (p == -2 || p == 4) {
        a.reason = "klein_bottle";
        return a;
    }
    a.accepted = true;
    a.canonical = std::min(p, -p + 2);
    return a;
}

QFilling family_filling(i64 p, const Slope& pi) { return {slope(2), slope(p - 2), slope(1, p), pi}; }

std::pair<ManifoldDesc, ManifoldDesc> family_manifolds(i64 p) {
    auto adm = admissible_p(p);
    if (!adm.accepted) throw std::invalid_argument("p=" + std::to_string(p) + " rejected: " + adm.reason);
    return {cover_Q(family_filling(p, frac(-1, 3))), cover_Q(family_filling(p, kInf))};
}

bool verify_symmetries(const QFilling& f) {
    QFilling swapped{f.phi, f.theta, f.omega, f.pi};
    if (!equivalent(cover_Q(f), cover_Q(swapped))) return false;
    // family members Q(2, p-2, 1/p, pi) against Q(2, -p, 1/(-p+2), pi)
    const Slope& w = *f.omega;
    if (*f.theta == slope(2) && !w.is_inf() && (w.num == 1 || w.num == -1)) {
        i64 p = w.num * w.den;
        if (*f.phi == slope(p - 2)) {
            QFilling other = family_filling(-p + 2, *f.pi);
            if (!equivalent(cover_Q(f), cover_Q(other))) return false;
        }
    }
    return true;
}

}  // namespace fl
