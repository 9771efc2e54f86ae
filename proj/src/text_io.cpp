#include "dglcl/text_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <vector>

#include "dglcl/error.hpp"

namespace dglcl {

namespace {

template <typename T>
std::vector<T> parse_tokens(std::istream& in, const char* what) {
    std::vector<T> out;
    std::string token;
    while (in >> token) {
        T value{};
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (*first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw Error(ErrorCode::Parse, std::string("invalid ") + what + " token '" + token + "'");
        }
        out.push_back(value);
    }
    return out;
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    return in;
}

}  // namespace

Sequence parse_sequence(std::istream& in) {
    auto symbols = parse_tokens<Symbol>(in, "symbol");
    if (symbols.empty()) throw Error(ErrorCode::EmptyVector, "sequence file holds no symbols");
    return Sequence(std::move(symbols));
}

Sequence read_sequence_file(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_sequence(in);
}

Distribution parse_distribution(std::istream& in) {
    return Distribution(parse_tokens<double>(in, "probability"));
}

Distribution read_distribution_file(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_distribution(in);
}

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto fmt = (value != 0.0 && std::abs(value) < 1e-4) ? std::chars_format::scientific
                                                                : std::chars_format::general;
    const int precision = fmt == std::chars_format::scientific ? 11 : 12;
    const auto res = std::to_chars(buf, buf + sizeof buf, value, fmt, precision);
    std::string out(buf, res.ptr);
    if (fmt == std::chars_format::scientific) {
        // Trim trailing zeros of the mantissa to match the general format's style.
        const auto e = out.find('e');
        auto mant_end = e;
        while (mant_end > 0 && out[mant_end - 1] == '0') --mant_end;
        if (mant_end > 0 && out[mant_end - 1] == '.') --mant_end;
        out.erase(mant_end, e - mant_end);
    }
    return out;
}

}  // namespace dglcl
