#pragma once

// Run configuration shared by the CLI and the verification suites.

#include "bqm/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bqm {

enum class Backend { Exact, Numeric };

struct RunConfig {
    RootType type = RootType::A1;
    Backend backend = Backend::Exact;
    std::string nu = "2/5";
    std::string k = "3/7";
    std::string k1 = "3/7";
    std::string k0 = "2/3";
    std::string u1 = "5/4";
    std::string u0 = "4/9";
    double atol = 1e-12;
    double rtol = 1e-9;
    int terms = 200;        // truncation for infinite products
    int series_terms = 80;  // truncation for series
    int order = 6;          // bqKZ series order N
    std::uint64_t seed = 20221124;
    bool timings = false;  // include measured times in the JSON report
    std::vector<std::string> suites;

    HeckeParams<Rat> exact_params() const {
        if (type == RootType::A1) return HeckeParams<Rat>::a1(parse_rational(nu), parse_rational(k));
        return HeckeParams<Rat>::cc(parse_rational(nu), parse_rational(k1), parse_rational(k0),
                                    parse_rational(u1), parse_rational(u0));
    }
    HeckeParams<Cx> numeric_params() const {
        auto p = exact_params();
        HeckeParams<Cx> n;
        n.type = p.type;
        n.nu = scalar_traits<Cx>::from_rat(p.nu);
        n.k1 = scalar_traits<Cx>::from_rat(p.k1);
        n.k0 = scalar_traits<Cx>::from_rat(p.k0);
        n.u1 = scalar_traits<Cx>::from_rat(p.u1);
        n.u0 = scalar_traits<Cx>::from_rat(p.u0);
        return n;
    }
};

}  // namespace bqm
