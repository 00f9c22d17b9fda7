#pragma once

#include <complex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_out.hpp"

namespace jqdcli {

using cx = std::complex<double>;

// Flag values shared by all subcommands; each subcommand binds the ones it uses.
struct Options {
    std::string p1 = "", p2 = "";
    std::string A = "", B = "";
    std::string alpha = "0", beta = "0";
    int n = -1;
    std::string degrees;
    double tol = 1e-10;
    double budget = 50;
    unsigned long long seed = 1;
    std::string json, csv, svg;
    int workers = 1;
    std::string grid = "-3..3x-3..3";
    int res = 200;
    double s = 0;
    int probes = 64;
    double radius = 2;
    std::string P, Q, R;
    std::string Q2, Q1, P1, Q0 = "1", pp = "0", qq = "0";
    bool jacobi = false;
    int which = 1;
};

// "a+bi", "2i", "-i", "1.5", "1e-3-2.5i" or "re,im".
cx parse_complex(const std::string& text);
// ';'-separated complex list, ascending coefficients.
std::vector<cx> parse_complex_list(const std::string& text);
// "20,40,60"
std::vector<int> parse_int_list(const std::string& text);

void require(bool cond, const std::string& what);  // throws usage error

// Writes JSON to opts.json or stdout.
void emit(const Options& o, Json j);
void write_file(const std::string& path, const std::string& content);

void add_poly_commands(CLI::App& app, Options& o);
void add_qd_commands(CLI::App& app, Options& o);

}  // namespace jqdcli
