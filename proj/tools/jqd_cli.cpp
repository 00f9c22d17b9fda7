#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <jqd/errors.hpp>

#include "cli_common.hpp"

namespace jqdcli {

namespace {

bool parse_real(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

}  // namespace

cx parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&]() -> cx { jqd::fail_input("usage", "cannot parse complex number '" + raw + "'"); };
    if (auto comma = s.find(','); comma != std::string::npos) {
        double re = 0, im = 0;
        if (!parse_real(s.substr(0, comma), re) || !parse_real(s.substr(comma + 1), im)) return bad();
        return {re, im};
    }
    if (s.empty()) return bad();
    if (s.back() != 'i' && s.back() != 'j') {
        double re;
        if (!parse_real(s, re)) return bad();
        return {re, 0.0};
    }
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    double re = 0, im = 0;
    if (!re_part.empty() && !parse_real(re_part, re)) return bad();
    if (im_part.empty() || im_part == "+") im = 1;
    else if (im_part == "-") im = -1;
    else if (!parse_real(im_part, im)) return bad();
    return {re, im};
}

std::vector<cx> parse_complex_list(const std::string& text) {
    std::vector<cx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_complex(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        long v = std::strtol(item.c_str(), &end, 10);
        if (item.empty() || *end != '\0') jqd::fail_input("usage", "cannot parse integer list '" + text + "'");
        out.push_back(int(v));
    }
    return out;
}

void require(bool cond, const std::string& what) {
    if (!cond) jqd::fail_input("usage", what);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) jqd::fail_input("io", "cannot open " + path + " for writing");
    f << content;
}

void emit(const Options& o, Json j) {
    std::string text = dump(j);
    if (o.json.empty())
        std::fwrite(text.data(), 1, text.size(), stdout);
    else
        write_file(o.json, text);
}

}  // namespace jqdcli

int main(int argc, char** argv) {
    using namespace jqdcli;
    CLI::App app{"Jacobi root asymptotics and quadratic differential toolkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    Options opts;
    add_poly_commands(app, opts);
    add_qd_commands(app, opts);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const jqd::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        if (e.kind() == jqd::ErrorKind::invalid_input) {
            if (e.name() == "usage") std::fprintf(stderr, "Run with --help for usage.\n");
            return 2;
        }
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: internal: %s\n", e.what());
        return 1;
    }
    return 0;
}
