#include "linaut/schedule.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace linaut {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("Rate::parse: bad " + std::string(what) + " '" +
                                    std::string(text) + "'");
    return value;
}

} // namespace

Rate::Rate(std::uint64_t m, std::uint64_t n) : m_(m), n_(n) {
    if (n_ == 0)
        throw std::invalid_argument("Rate: denominator must be positive");
    const std::uint64_t g = std::gcd(m_, n_);
    if (g > 1) {
        m_ /= g;
        n_ /= g;
    }
}

std::string Rate::to_string() const {
    return std::to_string(m_) + "/" + std::to_string(n_);
}

Rate Rate::parse(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rate(parse_u64(text, "numerator"), 1);
    return Rate(parse_u64(text.substr(0, slash), "numerator"),
                parse_u64(text.substr(slash + 1), "denominator"));
}

std::vector<Head> schedule_for(const Rate& rate, std::size_t len) {
    const std::uint64_t period = rate.n() + rate.m();
    std::vector<Head> heads;
    heads.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        heads.push_back(i % period < rate.n() ? Head::Left : Head::Right);
    return heads;
}

ConformanceReport check_conformance(const LinearAutomaton& a,
                                    const Rate& rate,
                                    const std::vector<std::string>& words) {
    ConformanceReport report;
    for (const std::string& word : words) {
        ++report.words_checked;
        const RunTrace trace = run(a, word);
        const std::vector<Head> expected = schedule_for(rate, trace.steps.size());
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            if (trace.steps[i].head != expected[i]) {
                report.violations.push_back({word, i + 1, expected[i], trace.steps[i].head});
                break;
            }
        }
    }
    return report;
}

} // namespace linaut
