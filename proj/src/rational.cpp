#include "ytg/rational.hpp"

#include <cstdlib>
#include <string>
#include <type_traits>

#include "ytg/errors.hpp"

namespace ytg {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        pos = 1;
    }
    if (pos == text.size()) {
        throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t k = pos; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            throw InvalidInput("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    return make_rational(num, den);
}

Budget Budget::from_env() {
    Budget b;
    auto read = [](const char* name, auto& slot) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            long long parsed = std::strtoll(v, &end, 10);
            if (end != v && *end == '\0' && parsed > 0) {
                slot = static_cast<std::remove_reference_t<decltype(slot)>>(parsed);
            }
        }
    };
    read("YTG_MAX_OBJECTS", b.max_objects);
    read("YTG_MAX_SUBSET_N", b.max_subset_n);
    read("YTG_MAX_SYMMETRIZE_N", b.max_symmetrize_n);
    return b;
}

}  // namespace ytg
