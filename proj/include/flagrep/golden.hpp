#pragma once

#include <string>
#include <vector>

#include "flagrep/poly.hpp"
#include "flagrep/rational.hpp"

namespace flagrep::golden {

// FNV-1a 64 of the raw file bytes, lowercase hex.
std::string file_checksum(const std::string& path);

// Verifies `name` against data/golden/CHECKSUMS before returning the bytes.
std::string load_checked(const std::string& data_dir, const std::string& name);

struct ThetaTable {
    std::string group;
    std::string weight;
    std::vector<polyalg::Poly> coordinates;  // in t-variables
};

ThetaTable load_theta_table(const std::string& data_dir, const std::string& group);

struct XiTerm {
    std::vector<int> word;
    Rat coeff;
};

struct XiGoldenRow {
    int r = 0;
    std::string generator;
    Rat scale = 1;
    std::vector<XiTerm> image;
};

struct XiTable {
    std::string group;
    std::vector<XiGoldenRow> rows;
};

XiTable load_xi_table(const std::string& data_dir, const std::string& group);

std::string default_data_dir();

}  // namespace flagrep::golden
