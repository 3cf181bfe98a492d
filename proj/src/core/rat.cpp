#include "core/rat.hpp"

#include <stdexcept>

namespace wrac {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(mpz_class(n), mpz_class(d));
    v_.canonicalize();
}

std::optional<Rat> Rat::parse(std::string_view s) {
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        if (t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view nu = s, de = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        nu = s.substr(0, slash);
        de = s.substr(slash + 1);
    }
    if (!digits(nu) || !digits(de)) return std::nullopt;
    mpq_class q(std::string(nu) + "/" + std::string(de), 10);
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Rat(std::move(q));
}

std::string Rat::str() const { return v_.get_str(); }

size_t Rat::hash() const { return std::hash<std::string>{}(str()); }

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

namespace {

mpz_class pow10z(unsigned long t) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, t);
    return p;
}

// Digits of the value 0.D * 10^e laid out as plain decimal, fraction zeros trimmed.
std::string place_digits(bool neg, const std::string& dig, long e) {
    std::string out = neg ? "-" : "";
    if (e <= 0) {
        std::string frac = std::string(static_cast<size_t>(-e), '0') + dig;
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        out += "0." + frac;
        if (out.back() == '.') out.pop_back();
    } else if (static_cast<size_t>(e) >= dig.size()) {
        out += dig + std::string(static_cast<size_t>(e) - dig.size(), '0');
    } else {
        std::string ip = dig.substr(0, static_cast<size_t>(e));
        std::string fp = dig.substr(static_cast<size_t>(e));
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out += ip;
        if (!fp.empty()) out += "." + fp;
    }
    return out;
}

}  // namespace

std::string decimal_string(const Rat& r, int max_sig) {
    if (r.sign() == 0) return "0";
    bool neg = r.sign() < 0;
    mpz_class n = r.num();
    if (neg) n = -n;
    mpz_class d = r.den();

    mpz_class rest = d;
    unsigned long twos = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(5).get_mpz_t());

    if (rest == 1) {
        // n / (2^a 5^b) = n 2^(t-a) 5^(t-b) / 10^t for t = max(a, b).
        unsigned long t = std::max(twos, fives);
        mpz_class f2, f5;
        mpz_ui_pow_ui(f2.get_mpz_t(), 2, t - twos);
        mpz_ui_pow_ui(f5.get_mpz_t(), 5, t - fives);
        mpz_class scaled = n * f2 * f5;
        std::string dig = scaled.get_str();
        return place_digits(neg, dig, static_cast<long>(dig.size()) - static_cast<long>(t));
    }

    // Leading-digit exponent e: value lies in [10^(e-1), 10^e).
    long e;
    if (n >= d) {
        e = static_cast<long>(floor_div(n, d).get_str().size());
    } else {
        e = 0;
        mpz_class scaled = n;
        while (scaled < d) {
            scaled *= 10;
            --e;
        }
        ++e;
    }
    // m = round(n / d * 10^(max_sig - e)), half away from zero.
    mpz_class a = n, b = d;
    if (max_sig >= e)
        a *= pow10z(static_cast<unsigned long>(max_sig - e));
    else
        b *= pow10z(static_cast<unsigned long>(e - max_sig));
    mpz_class m = floor_div(2 * a + b, 2 * b);
    std::string dig = m.get_str();
    if (static_cast<int>(dig.size()) > max_sig) {
        // Carry overflow (all nines rounded up).
        dig.pop_back();
        ++e;
    }
    return place_digits(neg, dig, e);
}

}  // namespace wrac
