#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sympmat/cli.hpp"
#include "sympmat/error.hpp"
#include "sympmat/io.hpp"
#include "sympmat/strata.hpp"
#include "sympmat/witness.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sympmat;

using SignedPairs = std::vector<std::pair<int, int>>;

namespace {

BasisSet to_bases(int n, const SignedPairs& pairs) {
    GroundSet e{n};
    BasisSet out;
    for (auto [a, b] : pairs) out.push_back(make_pair(e.from_signed(a), e.from_signed(b)));
    return normalize(std::move(out));
}

SignedPairs to_signed(int n, const BasisSet& b) {
    GroundSet e{n};
    SignedPairs out;
    for (const auto& p : b) out.emplace_back(e.to_signed(p.lo), e.to_signed(p.hi));
    return out;
}

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const io::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_sympmat, m) {
    m.doc() = "Rank-2 symplectic matroids: enumeration, representability and SpG(2, 2n) strata";

    py::register_exception<Error>(m, "SympmatError", PyExc_ValueError);

    m.def("admissible_order_count", [](int n) { return enumerate_admissible_orders(n).size(); }, "n"_a);
    m.def("admissible_pairs", [](int n) { return to_signed(n, admissible_pairs(n)); }, "n"_a);

    m.def("enumerate_symplectic", [](int n) {
        std::vector<SignedPairs> out;
        for (const auto& s : enumerate_symplectic(n)) out.push_back(to_signed(n, s.bases()));
        return out;
    }, "n"_a);

    m.def("is_symplectic_matroid", [](int n, const SignedPairs& b) { return is_symplectic_matroid(to_bases(n, b), n); },
          "n"_a, "bases"_a);

    m.def("orbits_json", [](int n, const std::string& group) {
        std::vector<BasisSet> sets;
        Group g = group == "s2n" ? Group::S2n : Group::BCn;
        if (g == Group::BCn)
            for (const auto& s : enumerate_symplectic(n)) sets.push_back(s.bases());
        else
            for (const auto& s : enumerate_symmetric(n)) sets.push_back(s.bases());
        io::Json arr = io::Json::array();
        for (const auto& o : orbits(sets, g, n)) {
            io::Json members = io::Json::array();
            for (const auto& b : o.members) members.push_back(io::bases_to_json(b, n));
            arr.push_back(io::Json{{"representative", io::bases_to_json(o.representative, n)}, {"members", members}});
        }
        return dump(arr);
    }, "n"_a, "group"_a = "bcn");

    m.def("representability_json", [](int n, const SignedPairs& b) {
        SymplecticMatroid s(n, to_bases(n, b));
        RepresentabilityReport r;
        try {
            r = is_representable(s);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoLifting) throw;
        }
        return dump(io::to_json(r, n));
    }, "n"_a, "bases"_a);

    m.def("witness_json", [](int n, const SignedPairs& b) {
        SymplecticMatroid s(n, to_bases(n, b));
        auto w = build_symplectic_witness(s);
        auto j = io::to_json(w);
        j["certificate"] = io::to_json(verify_certificate(w, s));
        return dump(j);
    }, "n"_a, "bases"_a);

    m.def("verify_json", [](const std::string& witness, const SignedPairs& b) {
        auto w = io::witness_from_json(io::Json::parse(witness));
        return dump(io::to_json(verify_certificate(w, SymplecticMatroid(w.n(), to_bases(w.n(), b)))));
    }, "witness"_a, "bases"_a);

    m.def("cell_dims_json", [](int n, const SignedPairs& b) {
        auto d = cell_dims(SymplecticMatroid(n, to_bases(n, b)));
        auto j = io::to_json(d);
        j["max_lifting"] = io::to_json(d.max_lifting);
        return dump(j);
    }, "n"_a, "bases"_a);

    m.def("stabilizer_json", [](int n, const SignedPairs& b, const std::string& torus) {
        return dump(io::to_json(stabilizer(to_bases(n, b), n, torus == "T" ? Torus::Symplectic : Torus::Full)));
    }, "n"_a, "bases"_a, "torus"_a = "T");

    m.def("polytope_json", [](int n, const SignedPairs& b) {
        return dump(io::to_json(symplectic_polytope(to_bases(n, b), n)));
    }, "n"_a, "bases"_a);

    m.def("classify_json", [](int n) { return dump(io::to_json(classify(n))); }, "n"_a);
    m.def("strata_csv", [](int n) { return io::strata_csv(classify(n)); }, "n"_a);

    m.def("betti_numbers", &betti_numbers, "n"_a);

    m.def("schubert_json", [](int n, std::pair<int, int> pair) {
        return dump(io::to_json(sp_schubert(to_bases(n, {pair}).front(), n), n));
    }, "n"_a, "pair"_a);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "args"_a);
}
