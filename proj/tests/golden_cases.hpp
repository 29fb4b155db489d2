#ifndef LATPATH_TESTS_GOLDEN_CASES_HPP
#define LATPATH_TESTS_GOLDEN_CASES_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// The published tables and the CLI invocations that regenerate them.
namespace golden {

struct Table {
    const char* file;
    std::vector<std::string> args;
};

inline const std::vector<Table>& tables() {
    static const std::vector<Table> all{
        {"table1_ballot_ext.tsv", {"table", "ballot-ext", "--max", "6"}},
        {"table2_c2.tsv", {"table", "cp", "--p", "2", "--max", "8"}},
        {"table3_d2.tsv", {"table", "dp", "--p", "2", "--max", "7", "--nmax", "5"}},
        {"table4_d2_ext.tsv", {"table", "d2-ext", "--max", "4", "--nmax", "6"}},
        {"table6_s.tsv", {"table", "s", "--max", "13", "--nmax", "6"}},
        {"table7_s_prime.tsv", {"table", "s-prime", "--max", "6"}},
        {"table8_p1_ext.tsv",
         {"table", "ph-ext", "--steps", "-1,1,2", "--h", "1", "--max", "7", "--nmin", "-10", "--nmax", "4"}},
        {"table9_p0_ext.tsv",
         {"table", "ph-ext", "--steps", "-1,2", "--h", "0", "--max", "7", "--nmin", "-14", "--nmax", "3"}},
    };
    return all;
}

inline std::string read(const std::string& name) {
    std::ifstream in(std::string(LATPATH_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace golden

#endif  // LATPATH_TESTS_GOLDEN_CASES_HPP
