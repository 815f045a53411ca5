#include <catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "sympmat/io.hpp"

using namespace sympmat;
using io::Json;

TEST_CASE("basis sets use signed labels") {
    auto b = signed_bases(2, {{1, 2}, {-1, -2}, {1, -2}});
    auto j = io::bases_to_json(b, 2);
    CHECK(j.dump() == "[[1,2],[1,-2],[-2,-1]]");
    CHECK(io::bases_from_json(j, 2) == b);
    CHECK(error_kind([] { io::bases_from_json(Json::parse("[[1,3]]"), 2); }) == ErrorKind::InvalidInput);
    CHECK(error_kind([] { io::bases_from_json(Json::parse("[[1]]"), 2); }) == ErrorKind::InvalidInput);
    CHECK(error_kind([] { io::bases_from_json(Json::parse("[[1,1]]"), 2); }) == ErrorKind::InvalidInput);
    CHECK(error_kind([] { io::bases_from_json(Json::parse("{}"), 2); }) == ErrorKind::InvalidInput);
}

TEST_CASE("matroid documents") {
    int n = 0;
    auto b = io::read_matroid_document(Json::parse(R"({"n": 2, "bases": [[1, -2]]})"), n);
    CHECK(n == 2);
    CHECK(b == signed_bases(2, {{1, -2}}));
    CHECK(error_kind([&] { io::read_matroid_document(Json::parse(R"({"bases": []})"), n); }) ==
          ErrorKind::InvalidInput);
    CHECK(error_kind([&] { io::read_matroid_document(Json::parse(R"({"n": 0, "bases": []})"), n); }) ==
          ErrorKind::InvalidInput);
}

TEST_CASE("witness JSON round trip with rational strings") {
    SymplecticMatroid full(2, admissible_pairs(2));
    auto w = build_symplectic_witness(full);
    auto j = io::to_json(w);
    CHECK(j["matrix"][0][3] == "-1/3");
    CHECK(j["symplectic_sum"] == "0/1");
    CHECK(j["plucker"].size() == 6);
    CHECK(j["plucker"][0]["pair"].dump() == "[1,2]");
    auto back = io::witness_from_json(Json::parse(j.dump()));
    CHECK(back.matrix() == w.matrix());
    CHECK(back.plucker() == w.plucker());
    CHECK(verify_certificate(back, full).ok);

    j["plucker"][0]["value"] = "7/1";
    CHECK(verify_certificate(io::witness_from_json(j), full).reason == CertificateFailure::MinorsMismatch);
}

TEST_CASE("polytope JSON holds integer vectors") {
    auto p = symplectic_polytope(SymplecticMatroid(2, admissible_pairs(2)));
    auto j = io::to_json(p);
    CHECK(j["points"].dump() == "[[-1,-1],[-1,1],[1,-1],[1,1]]");
    CHECK(j["affine_dim"] == 2);
}

TEST_CASE("stratum CSV has one row per stratum") {
    auto c = classify(2);
    auto csv = io::strata_csv(c);
    std::istringstream in(csv);
    std::string line;
    int lines = 0;
    std::getline(in, line);
    CHECK(line.rfind("bases,", 0) == 0);
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 15);
    CHECK(csv.find("\"[[1,2],[1,-2],[2,-1],[-2,-1]]\"") != std::string::npos);
}

TEST_CASE("classification JSON") {
    auto j = io::to_json(classify(2));
    CHECK(j["strata"].size() == 15);
    CHECK(j["types"].size() == 16);
    auto s = j["strata"][0];
    CHECK(s.contains("dims"));
    CHECK(s["stabilizer"].size() == 2);
}
