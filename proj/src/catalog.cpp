#include "rydgrav/catalog.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rydgrav::detector {

namespace {

std::string trim(const std::string& s)
{
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& value, long line)
{
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw CatalogError(line, "trailing characters after number '" + value + "'");
        return v;
    } catch (const CatalogError&) {
        throw;
    } catch (const std::exception&) {
        throw CatalogError(line, "expected a number, got '" + value + "'");
    }
}

void finish_source(GwSource& src, bool open, long line, std::vector<GwSource>& out)
{
    if (!open)
        return;
    if (src.name.empty())
        throw CatalogError(line, "source missing 'name'");
    if (!(src.omega > 0.0))
        throw CatalogError(line, "source '" + src.name + "' missing positive omega_rad_per_s");
    if (src.amplitude.has_value() == src.flux.has_value())
        throw CatalogError(line, "source '" + src.name
                                     + "' needs exactly one of amplitude and flux_w_per_m2");
    out.push_back(src);
    src = GwSource{};
}

} // namespace

std::vector<GwSource> load_catalog(std::istream& in)
{
    std::vector<GwSource> out;
    GwSource current;
    bool open = false;
    long line_no = 0;
    std::string raw;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;

        if (line == "[source]") {
            finish_source(current, open, line_no, out);
            open = true;
            continue;
        }
        if (line.front() == '[')
            throw CatalogError(line_no, "unknown section '" + line + "'");
        if (!open)
            throw CatalogError(line_no, "key outside a [source] section");

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CatalogError(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw CatalogError(line_no, "empty value for '" + key + "'");

        if (key == "name")
            current.name = value;
        else if (key == "omega_rad_per_s")
            current.omega = parse_number(value, line_no);
        else if (key == "amplitude")
            current.amplitude = parse_number(value, line_no);
        else if (key == "flux_w_per_m2")
            current.flux = parse_number(value, line_no);
        else if (key == "amplitude_min")
            current.amplitude_min = parse_number(value, line_no);
        else if (key == "amplitude_max")
            current.amplitude_max = parse_number(value, line_no);
        else if (key == "spindown_years")
            current.spindown_years = parse_number(value, line_no);
        else if (key == "los_velocity_mps")
            current.los_velocity_mps = parse_number(value, line_no);
        else
            throw CatalogError(line_no, "unknown field '" + key + "'");
    }
    finish_source(current, open, line_no, out);
    if (out.empty())
        throw CatalogError(line_no, "catalog contains no sources");
    return out;
}

std::vector<GwSource> load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CatalogError(0, "cannot open catalog file '" + path + "'");
    return load_catalog(in);
}

const GwSource& find_source(const std::vector<GwSource>& catalog, const std::string& name)
{
    for (const auto& s : catalog)
        if (s.name == name)
            return s;
    std::ostringstream msg;
    msg << "unknown source '" << name << "'; catalog has:";
    for (const auto& s : catalog)
        msg << " " << s.name;
    throw std::out_of_range(msg.str());
}

} // namespace rydgrav::detector
