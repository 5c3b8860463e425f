#include "fusionkit/weight.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "fusionkit/error.hpp"

namespace fusionkit {

bool Weight::is_dominant() const {
    return std::all_of(labels.begin(), labels.end(), [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(labels.begin(), labels.end(), [](int x) { return x == 0; });
}

int Weight::nonzero_count() const {
    return static_cast<int>(std::count_if(labels.begin(), labels.end(), [](int x) { return x != 0; }));
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.labels.size() != labels.size()) throw AlgebraMismatch("weights of different rank");
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] += other.labels[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.labels.size() != labels.size()) throw AlgebraMismatch("weights of different rank");
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] -= other.labels[i];
    return *this;
}

std::string Weight::str() const {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(labels[i]);
    }
    return out;
}

Weight Weight::parse(std::string_view text) {
    Weight out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        if (!field.empty() && field.front() == '+') field.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError("invalid Dynkin label '" + std::string(field) + "' in '" + std::string(text) + "'");
        out.labels.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::size_t IntVectorHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept { return IntVectorHash{}(w.labels); }

}  // namespace fusionkit
