#include "cca/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace cca::io {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string csv_field(std::string_view raw) {
    if (raw.find_first_of(",\"\n") == std::string_view::npos) return std::string(raw);
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& os, const CsvTable& table) {
    os << "# schema_version=" << kSchemaVersion << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ',';
        os << csv_field(table.header[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_field(row[i]);
        }
        os << '\n';
    }
}

namespace {

double parse_plain_double(std::string_view text) {
    double v = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("parse_angle: malformed number '" + std::string(text) + "'");
    return v;
}

}  // namespace

double parse_angle(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_angle: empty input");

    const std::size_t pi_pos = text.find("pi");
    if (pi_pos == std::string_view::npos) return parse_plain_double(text);

    std::string_view coef_text = text.substr(0, pi_pos);
    std::string_view rest = text.substr(pi_pos + 2);
    if (!coef_text.empty() && coef_text.back() == '*')
        coef_text.remove_suffix(1);

    double coef = 1.0;
    if (coef_text == "-")
        coef = -1.0;
    else if (!coef_text.empty())
        coef = parse_plain_double(coef_text);

    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/')
            throw std::invalid_argument("parse_angle: expected '/denominator' after pi in '" +
                                        std::string(text) + "'");
        den = parse_plain_double(rest.substr(1));
        if (den == 0.0) throw std::invalid_argument("parse_angle: zero denominator");
    }
    return coef * std::numbers::pi / den;
}

SweepSpec parse_sweep(std::string_view text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos
                                                        : text.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw std::invalid_argument("parse_sweep: expected from:to:count, got '" +
                                    std::string(text) + "'");
    SweepSpec spec;
    spec.from = parse_angle(text.substr(0, c1));
    spec.to = parse_angle(text.substr(c1 + 1, c2 - c1 - 1));
    const std::string_view count_text = text.substr(c2 + 1);
    int count = 0;
    const auto [ptr, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size())
        throw std::invalid_argument("parse_sweep: malformed count '" + std::string(count_text) + "'");
    spec.count = count;
    return spec;
}

std::filesystem::path resolve_output(const std::filesystem::path& path) {
    if (path.is_absolute()) return path;
    if (const char* dir = std::getenv("CCA_OUTPUT_DIR"); dir != nullptr && *dir != '\0')
        return std::filesystem::path(dir) / path;
    return path;
}

nlohmann::ordered_json state_to_json(spectral::Parity parity, double energy, double decay,
                                     double x, const lattice::AmplitudeVector& profile) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["parity"] = parity == spectral::Parity::even ? "even" : "odd";
    j["energy"] = energy;
    j["decay"] = decay;
    j["x"] = x;
    auto rows = nlohmann::ordered_json::array();
    for (int site = profile.j_min; site <= profile.j_max(); ++site) {
        const auto c = profile.at(site);
        nlohmann::ordered_json row;
        row["j"] = site;
        row["re"] = c.real();
        row["im"] = c.imag();
        row["prob"] = std::norm(c);
        rows.push_back(std::move(row));
    }
    j["profile"] = std::move(rows);
    return j;
}

ParsedState state_from_json(const nlohmann::json& j) {
    ParsedState out;
    const std::string parity = j.at("parity").get<std::string>();
    if (parity != "even" && parity != "odd")
        throw std::invalid_argument("state_from_json: parity must be 'even' or 'odd'");
    out.parity = parity == "even" ? spectral::Parity::even : spectral::Parity::odd;
    out.energy = j.at("energy").get<double>();
    out.decay = j.at("decay").get<double>();
    out.x = j.at("x").get<double>();

    const auto& rows = j.at("profile");
    if (rows.empty()) throw std::invalid_argument("state_from_json: empty profile");
    out.profile = lattice::AmplitudeVector(rows.front().at("j").get<int>(),
                                           static_cast<Eigen::Index>(rows.size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        out.profile.values[i++] =
            std::complex<double>(row.at("re").get<double>(), row.at("im").get<double>());
    }
    return out;
}

}  // namespace cca::io
