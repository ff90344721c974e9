#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>

#include "hblock/decomposition.hpp"
#include "hblock/errors.hpp"
#include "hblock/generators.hpp"
#include "hblock/inequalities.hpp"
#include "hblock/json_io.hpp"

using namespace hblock;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hblock_json_test_" + name);
}

}  // namespace

TEST(MatrixJson, RoundTripIsExact) {
    ComplexMatrix m(2, 3);
    m << Complex(0.1, -0.2), 1.0 / 3.0, Complex(0, 1e-300), -7.0, Complex(1e300, 2), 0.0;
    const Json j = matrix_to_json(m);
    EXPECT_EQ(j["rows"], 2);
    EXPECT_EQ(j["cols"], 3);
    EXPECT_EQ(j["entries"][0][1], -0.2);
    EXPECT_EQ(matrix_from_json(j), m);
    EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), m);
}

TEST(MatrixJson, RejectsMalformed) {
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":1,"cols":1})")), InputError);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[[1,0]]})")), InputError);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":0,"cols":0,"entries":[]})")), InputError);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":[[1]]})")), InputError);
    EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":[["a",0]]})")), InputError);
    Json inf = Json::parse(R"({"rows":1,"cols":1,"entries":[[0,0]]})");
    inf["entries"][0][0] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(matrix_from_json(inf), InputError);
    EXPECT_THROW(matrix_from_json(Json::parse("[1,2]")), InputError);
}

TEST(BlockMatrixJson, RoundTrip) {
    const BlockMatrix h = random_block_psd({5, 3, 2, 2, 1.0});
    const Json j = block_matrix_to_json(h);
    EXPECT_EQ(j["block_dim"], 2);
    EXPECT_EQ(j["block_count"], 3);
    const BlockMatrix back = block_matrix_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.data(), h.data());
    EXPECT_EQ(back.block_dim(), 2);

    Json bad = j;
    bad["block_dim"] = 4;
    EXPECT_THROW(block_matrix_from_json(bad), InputError);
}

TEST(CertificateJson, RoundTripSharedAndPerFactorCores) {
    const BlockMatrix h = random_block_psd({6, 2, 2, 2, 1.0});
    for (const DecompositionCertificate& cert :
         {two_block_isometries(h).certificate, two_corner_decomposition(h.data(), 2, 2)}) {
        const Json j = certificate_to_json(cert);
        EXPECT_EQ(j["weight"], cert.weight.str());
        EXPECT_EQ(j["core"].is_array(), !cert.shared_core());
        const DecompositionCertificate back = certificate_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.kind, cert.kind);
        EXPECT_EQ(back.weight, cert.weight);
        EXPECT_EQ(back.target, cert.target);
        ASSERT_EQ(back.factors.size(), cert.factors.size());
        for (std::size_t k = 0; k < cert.factors.size(); ++k) EXPECT_EQ(back.factors[k], cert.factors[k]);
        EXPECT_EQ(back.defects.reconstruction, cert.defects.reconstruction);
        EXPECT_EQ(certificate_to_json(back).dump(), j.dump());
    }
}

TEST(CertificateJson, QuaternionFields) {
    const Json j = certificate_to_json(quaternion_pipeline(random_block_psd({3, 4, 1, 1, 1.0}), 4).certificate);
    EXPECT_EQ(j["kind"], "quaternion");
    EXPECT_EQ(j["weight"], "1/4");
    EXPECT_EQ(j["factors"].size(), 4u);
    EXPECT_EQ(j["defects"]["isometry"].size(), 4u);
}

TEST(CertificateJson, MalformedInputs) {
    const Json good = certificate_to_json(two_block_isometries(random_block_psd({6, 2, 2, 2, 1.0})).certificate);
    for (const char* key : {"kind", "weight", "target", "core", "factors"}) {
        Json j = good;
        j.erase(key);
        EXPECT_THROW(certificate_from_json(j), MalformedCertificate) << key;
    }
    Json j = good;
    j["kind"] = "mystery";
    EXPECT_THROW(certificate_from_json(j), MalformedCertificate);
    j = good;
    j["weight"] = 0.5;
    EXPECT_THROW(certificate_from_json(j), MalformedCertificate);
    j = good;
    j["factors"][0] = matrix_to_json(identity(3));
    EXPECT_THROW(certificate_from_json(j), MalformedCertificate);
}

TEST(CheckReportJson, Schema) {
    CheckReport report = hiroshima_check(nonhermitian_counterexample());
    const Json j = check_report_to_json(report);
    EXPECT_EQ(j["tolerance"]["atol"], 1e-10);
    EXPECT_EQ(j["tolerance"]["rtol"], 1e-8);
    EXPECT_FALSE(j["passed"].get<bool>());
    const Json& c = j["checks"][0];
    EXPECT_EQ(c["name"], "hiroshima_majorization");
    EXPECT_TRUE(c["lhs"].is_array());
    EXPECT_EQ(c["first_failure"], 1);
    EXPECT_FALSE(c["passed"].get<bool>());
    EXPECT_TRUE(j["checks"][1]["lhs"].is_number());
    EXPECT_TRUE(j.contains("warnings"));

    const Json ok = check_report_to_json(hiroshima_check(random_block_psd({1, 2, 2, 2, 1.0})));
    EXPECT_TRUE(ok["passed"].get<bool>());
    EXPECT_FALSE(ok.contains("warnings"));
    EXPECT_FALSE(ok["checks"][0].contains("first_failure"));
}

TEST(GeneratorSpecJson, Fields) {
    const Json j = generator_spec_to_json({7, 4, 2, 3, 0.5});
    EXPECT_EQ(j.dump(), R"({"seed":7,"alpha":4,"n":2,"rank":3,"scale":0.5})");
}

TEST(Files, WriteReadAndErrors) {
    const auto path = temp_path("roundtrip.json");
    const Json j = block_matrix_to_json(random_block_psd({8, 2, 1, 1, 1.0}));
    write_json_file(path, j);
    EXPECT_EQ(read_json_file(path), j);

    const auto truncated = temp_path("truncated.json");
    {
        std::ofstream out(truncated);
        out << j.dump().substr(0, 20);
    }
    EXPECT_THROW(read_json_file(truncated), InputError);
    EXPECT_THROW(read_json_file(temp_path("does_not_exist.json")), InputError);
    std::filesystem::remove(path);
    std::filesystem::remove(truncated);
}
