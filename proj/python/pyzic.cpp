#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zic/gaussian.hpp"
#include "zic/regions.hpp"
#include "zic/schemes.hpp"
#include "zic/verifier.hpp"

namespace py = pybind11;

using namespace zic;

PYBIND11_MODULE(pyzic, mod) {
    mod.doc() = "Z interference channel with unidirectional transmitter cooperation: "
                "deterministic scheme verification and Gaussian bounds";

    py::class_<Rational>(mod, "Rational")
        .def(py::init<std::int64_t>())
        .def(py::init<std::int64_t, std::int64_t>())
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__float__", &Rational::to_double)
        .def("__int__", [](const Rational& r) { return r.num() / r.den(); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str_ratio() + ")"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__eq__", [](const Rational& a, std::int64_t b) { return a == Rational(b); })
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
        .def_static("parse", &Rational::parse);
    py::implicitly_convertible<std::int64_t, Rational>();

    // deterministic model
    py::enum_<det::Regime>(mod, "Regime")
        .value("WEAK_MODERATE", det::Regime::WeakModerate)
        .value("HIGH", det::Regime::High)
        .value("VERY_HIGH", det::Regime::VeryHigh);

    py::class_<det::DetConfig>(mod, "DetConfig")
        .def_readonly("m", &det::DetConfig::m)
        .def_readonly("n", &det::DetConfig::n)
        .def_readonly("C", &det::DetConfig::C)
        .def_property_readonly("q", &det::DetConfig::q)
        .def_property_readonly("alpha", &det::DetConfig::alpha)
        .def("__repr__", [](const det::DetConfig& c) {
            return "DetConfig(m=" + std::to_string(c.m) + ", n=" + std::to_string(c.n) +
                   ", C=" + std::to_string(c.C) + ")";
        });

    py::class_<det::LevelVector>(mod, "LevelVector")
        .def(py::init<int, std::uint64_t>(), py::arg("len"), py::arg("bits") = 0)
        .def_static("from_string", &det::LevelVector::from_string)
        .def_property_readonly("len", &det::LevelVector::len)
        .def_property_readonly("bits", &det::LevelVector::bits)
        .def("get", &det::LevelVector::get)
        .def("__str__", &det::LevelVector::str)
        .def("__xor__", &det::LevelVector::operator^)
        .def("__eq__", [](const det::LevelVector& a, const det::LevelVector& b) { return a == b; });

    mod.def("make_config", &det::make_config, py::arg("m"), py::arg("n"), py::arg("C"));
    mod.def("regime", &det::regime);
    mod.def("downshift", &det::downshift, py::arg("v"), py::arg("k"));
    mod.def(
        "transmit",
        [](const det::DetConfig& cfg, const det::LevelVector& x1, const det::LevelVector& x2) {
            auto out = det::transmit(cfg, x1, x2);
            return py::make_tuple(out.y1, out.y2);
        },
        py::arg("cfg"), py::arg("x1"), py::arg("x2"));

    // schemes
    py::enum_<schemes::Corner>(mod, "Corner")
        .value("R1_MAX", schemes::Corner::R1Max)
        .value("R2_MAX", schemes::Corner::R2Max)
        .value("R1_MAX_R2_COOP", schemes::Corner::R1MaxR2Coop)
        .value("R1_COOP_R2_MAX", schemes::Corner::R1CoopR2Max);

    py::class_<schemes::LinearScheme>(mod, "LinearScheme")
        .def_readonly("k1", &schemes::LinearScheme::k1)
        .def_readonly("k2", &schemes::LinearScheme::k2)
        .def_readonly("r", &schemes::LinearScheme::r)
        .def_property_readonly("m", &schemes::LinearScheme::m)
        .def_property_readonly("q", &schemes::LinearScheme::q)
        .def_property_readonly("coop_bits", &schemes::LinearScheme::coop_bits)
        .def("to_json", [](const schemes::LinearScheme& s) { return schemes::to_json(s); })
        .def_static("from_json", &schemes::from_json);

    mod.def("corners_for", &schemes::corners_for);
    mod.def("corner_scheme", &schemes::corner_scheme, py::arg("cfg"), py::arg("corner"));
    mod.def(
        "encode",
        [](const schemes::LinearScheme& s, std::uint64_t w1, std::uint64_t w2, std::uint64_t rnd) {
            auto out = schemes::encode(s, w1, w2, rnd);
            return py::make_tuple(out.x1, out.x2, out.v21);
        },
        py::arg("scheme"), py::arg("w1"), py::arg("w2"), py::arg("rand") = 0);
    mod.def("rate", &schemes::rate);

    // verifier
    py::class_<verifier::VerificationReport>(mod, "VerificationReport")
        .def_readonly("decodable1", &verifier::VerificationReport::decodable1)
        .def_readonly("decodable2", &verifier::VerificationReport::decodable2)
        .def_readonly("mutual_info_bits", &verifier::VerificationReport::mutual_info_bits)
        .def_readonly("secrecy_algebraic", &verifier::VerificationReport::secrecy_algebraic)
        .def_readonly("coop_budget_ok", &verifier::VerificationReport::coop_budget_ok)
        .def_readonly("rate_pair", &verifier::VerificationReport::rate_pair)
        .def_readonly("warning", &verifier::VerificationReport::warning)
        .def("all_green", &verifier::VerificationReport::all_green);

    mod.def("verify_decodable", &verifier::verify_decodable, py::arg("cfg"), py::arg("scheme"),
            py::arg("cap") = verifier::kDefaultEnumCap);
    mod.def("verify_secrecy_exhaustive", &verifier::verify_secrecy_exhaustive, py::arg("cfg"),
            py::arg("scheme"), py::arg("cap") = verifier::kDefaultEnumCap);
    mod.def("verify_secrecy_algebraic", &verifier::verify_secrecy_algebraic);
    mod.def("verify_coop_budget", &verifier::verify_coop_budget);
    mod.def("verify", &verifier::verify, py::arg("cfg"), py::arg("scheme"),
            py::arg("cap") = verifier::kDefaultEnumCap);

    // regions
    py::class_<regions::RateRegion>(mod, "RateRegion")
        .def_property_readonly("constraints", [](const regions::RateRegion& r) {
            py::list out;
            for (const auto& c : r.constraints) out.append(py::make_tuple(c.a, c.b, c.c));
            return out;
        });

    mod.def("capacity_region", &regions::capacity_region);
    mod.def("vertices", &regions::vertices);
    mod.def("contains", &regions::contains, py::arg("region"), py::arg("point"));
    mod.def("sum_capacity", &regions::sum_capacity);
    mod.def(
        "sum_capacity_curve",
        [](int m, int C, const std::vector<Rational>& grid) {
            py::list out;
            for (const auto& pt : regions::sum_capacity_curve(m, C, grid))
                out.append(py::make_tuple(pt.alpha, pt.normalized_sum));
            return out;
        },
        py::arg("m"), py::arg("C"), py::arg("alpha_grid"));

    // gaussian
    py::class_<gauss::GaussConfig>(mod, "GaussConfig")
        .def_readonly("P", &gauss::GaussConfig::P)
        .def_readonly("hd", &gauss::GaussConfig::hd)
        .def_readonly("hc", &gauss::GaussConfig::hc)
        .def_readonly("CG", &gauss::GaussConfig::CG)
        .def_property_readonly("snr", &gauss::GaussConfig::snr)
        .def_property_readonly("inr", &gauss::GaussConfig::inr);

    py::class_<gauss::CodebookParams>(mod, "CodebookParams")
        .def(py::init([](double t1, double t2, double b1, double b2, double l1, double l2) {
                 return gauss::CodebookParams{t1, t2, b1, b2, l1, l2};
             }),
             py::arg("theta1") = 1, py::arg("theta2") = 0, py::arg("beta1") = 1,
             py::arg("beta2") = 1, py::arg("lambda1") = 1, py::arg("lambda2") = 0)
        .def_readwrite("theta1", &gauss::CodebookParams::theta1)
        .def_readwrite("theta2", &gauss::CodebookParams::theta2)
        .def_readwrite("beta1", &gauss::CodebookParams::beta1)
        .def_readwrite("beta2", &gauss::CodebookParams::beta2)
        .def_readwrite("lambda1", &gauss::CodebookParams::lambda1)
        .def_readwrite("lambda2", &gauss::CodebookParams::lambda2);

    py::class_<gauss::PowerSplit>(mod, "PowerSplit")
        .def(py::init([](double pp1, double pa1, double pp2, double pcp2) {
                 return gauss::PowerSplit{pp1, pa1, pp2, pcp2};
             }),
             py::arg("Pp1") = 0, py::arg("Pa1") = 0, py::arg("Pp2") = 0, py::arg("Pcp2") = 0)
        .def_readwrite("Pp1", &gauss::PowerSplit::Pp1)
        .def_readwrite("Pa1", &gauss::PowerSplit::Pa1)
        .def_readwrite("Pp2", &gauss::PowerSplit::Pp2)
        .def_readwrite("Pcp2", &gauss::PowerSplit::Pcp2);

    py::class_<gauss::GridSpec>(mod, "GridSpec")
        .def(py::init<>())
        .def_static("uniform", &gauss::GridSpec::uniform)
        .def_readwrite("theta1", &gauss::GridSpec::theta1)
        .def_readwrite("theta2", &gauss::GridSpec::theta2)
        .def_readwrite("beta1", &gauss::GridSpec::beta1)
        .def_readwrite("beta2", &gauss::GridSpec::beta2)
        .def_readwrite("lambda1", &gauss::GridSpec::lambda1)
        .def_readwrite("lambda2", &gauss::GridSpec::lambda2);

    mod.def("gauss_config", &gauss::make_config, py::arg("P"), py::arg("hd"), py::arg("hc"),
            py::arg("CG"));
    mod.def("power_allocation", &gauss::power_allocation);
    mod.def("rate_pair", &gauss::rate_pair);
    mod.def("achievable_region", &gauss::achievable_region, py::arg("cfg"),
            py::arg("grid") = gauss::GridSpec{});
    mod.def("frontier_value", &gauss::frontier_value);
    mod.def("sum_rate_lower", &gauss::sum_rate_lower);
    mod.def("sum_rate_outer", &gauss::sum_rate_outer);
    mod.def("gap", &gauss::gap);
    mod.def("sum_gdof", &gauss::sum_gdof, py::arg("kappa"), py::arg("gamma"));
    mod.def(
        "gdof_numeric",
        [](double kappa, double gamma, const std::vector<double>& snrs) {
            return gauss::gdof_numeric(kappa, gamma, snrs);
        },
        py::arg("kappa"), py::arg("gamma"),
        py::arg("snr_list") = std::vector<double>{1e6, 1e9, 1e12});
}
