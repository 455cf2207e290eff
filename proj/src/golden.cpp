#include "flagrep/golden.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace flagrep::golden {

using nlohmann::json;

std::string default_data_dir() {
#ifdef FLAGREP_DATA_DIR
    return FLAGREP_DATA_DIR;
#else
    return "data";
#endif
}

static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string file_checksum(const std::string& path) {
    std::string bytes = read_file(path);
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string load_checked(const std::string& data_dir, const std::string& name) {
    std::string sums = read_file(data_dir + "/golden/CHECKSUMS");
    std::istringstream in(sums);
    std::map<std::string, std::string> expected;
    std::string hash, fname;
    while (in >> hash >> fname) expected[fname] = hash;
    auto it = expected.find(name);
    if (it == expected.end()) throw Error("no checksum recorded for " + name);
    std::string path = data_dir + "/golden/" + name;
    std::string got = file_checksum(path);
    if (got != it->second)
        throw Error("checksum mismatch for " + name + ": expected " + it->second + ", got " +
                    got + " (corpus is immutable; refusing to run)");
    return read_file(path);
}

ThetaTable load_theta_table(const std::string& data_dir, const std::string& group) {
    std::string lower = group;
    for (auto& c : lower) c = static_cast<char>(tolower(c));
    json j = json::parse(load_checked(data_dir, "theta_" + lower + ".json"));
    if (j.at("schema") != "flagrep-theta-v1") throw Error("unexpected theta schema");
    ThetaTable t;
    t.group = j.at("group");
    t.weight = j.at("weight");
    auto coords = j.at("coordinates");
    auto tvars = polyalg::make_vars("t", static_cast<int>(coords.size()), /*laurent=*/true);
    for (const auto& c : coords)
        t.coordinates.push_back(polyalg::parse_poly(tvars, c.get<std::string>()));
    return t;
}

XiTable load_xi_table(const std::string& data_dir, const std::string& group) {
    std::string lower = group;
    for (auto& c : lower) c = static_cast<char>(tolower(c));
    json j = json::parse(load_checked(data_dir, "xi_" + lower + ".json"));
    if (j.at("schema") != "flagrep-xi-v1") throw Error("unexpected xi schema");
    XiTable t;
    t.group = j.at("group");
    for (const auto& row : j.at("rows")) {
        XiGoldenRow r;
        r.r = row.at("r");
        r.generator = row.at("generator");
        if (row.contains("scale")) r.scale = rat_parse(row.at("scale").get<std::string>());
        for (const auto& term : row.at("image")) {
            XiTerm x;
            x.word = term.at("word").get<std::vector<int>>();
            x.coeff = rat_parse(term.at("coeff").get<std::string>());
            r.image.push_back(std::move(x));
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

}  // namespace flagrep::golden
