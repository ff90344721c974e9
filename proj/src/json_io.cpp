#include "hblock/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hblock/errors.hpp"

namespace hblock {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    const auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
    return *it;
}

Eigen::Index positive_int(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw InputError(std::string("field '") + name + "' must be a positive integer");
    return static_cast<Eigen::Index>(v.get<long long>());
}

Json real_field(const RealVector& v, bool scalar) {
    if (scalar && v.size() == 1) return v.front();
    Json arr = Json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    j["entries"] = std::move(entries);
    return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
    const Eigen::Index rows = positive_int(j, "rows");
    const Eigen::Index cols = positive_int(j, "cols");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols) {
        std::ostringstream msg;
        msg << "matrix 'entries' must hold rows * cols = " << rows * cols << " pairs";
        throw InputError(msg.str());
    }
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index k = 0; k < cols; ++k) {
            const Json& e = entries[static_cast<std::size_t>(i * cols + k)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw InputError("matrix entries must be [re, im] number pairs");
            m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    require_finite(m, "JSON matrix");
    return m;
}

Json block_matrix_to_json(const BlockMatrix& h) {
    Json j = matrix_to_json(h.data());
    j["block_dim"] = h.block_dim();
    j["block_count"] = h.block_count();
    return j;
}

BlockMatrix block_matrix_from_json(const Json& j) {
    return BlockMatrix(matrix_from_json(j), positive_int(j, "block_dim"), positive_int(j, "block_count"));
}

Json certificate_to_json(const DecompositionCertificate& cert) {
    Json j;
    j["kind"] = to_string(cert.kind);
    j["weight"] = cert.weight.str();
    j["target"] = matrix_to_json(cert.target);
    if (cert.shared_core()) {
        j["core"] = matrix_to_json(cert.cores.front());
    } else {
        Json cores = Json::array();
        for (const auto& c : cert.cores) cores.push_back(matrix_to_json(c));
        j["core"] = std::move(cores);
    }
    Json factors = Json::array();
    for (const auto& f : cert.factors) factors.push_back(matrix_to_json(f));
    j["factors"] = std::move(factors);
    j["defects"] = {{"reconstruction", cert.defects.reconstruction}, {"isometry", cert.defects.isometry}};
    return j;
}

DecompositionCertificate certificate_from_json(const Json& j) {
    try {
        DecompositionCertificate cert;
        const Json& kind = field(j, "kind");
        if (!kind.is_string()) throw MalformedCertificate("certificate 'kind' must be a string");
        cert.kind = certificate_kind_from_string(kind.get<std::string>());
        const Json& weight = field(j, "weight");
        if (!weight.is_string()) throw MalformedCertificate("certificate 'weight' must be a fraction string");
        cert.weight = Weight::parse(weight.get<std::string>());
        cert.target = matrix_from_json(field(j, "target"));
        const Json& core = field(j, "core");
        if (core.is_array()) {
            for (const auto& c : core) cert.cores.push_back(matrix_from_json(c));
        } else {
            cert.cores.push_back(matrix_from_json(core));
        }
        const Json& factors = field(j, "factors");
        if (!factors.is_array()) throw MalformedCertificate("certificate 'factors' must be an array");
        for (const auto& f : factors) cert.factors.push_back(matrix_from_json(f));
        if (const auto it = j.find("defects"); it != j.end() && it->is_object()) {
            cert.defects.reconstruction = it->value("reconstruction", 0.0);
            if (const auto iso = it->find("isometry"); iso != it->end() && iso->is_array())
                for (const auto& d : *iso)
                    if (d.is_number()) cert.defects.isometry.push_back(d.get<double>());
        }
        check_certificate_shape(cert);
        return cert;
    } catch (const MalformedCertificate&) {
        throw;
    } catch (const InputError& e) {
        throw MalformedCertificate(std::string("malformed certificate: ") + e.what());
    }
}

Json tolerance_to_json(const Tolerance& tol) { return {{"atol", tol.atol}, {"rtol", tol.rtol}}; }

Json check_report_to_json(const CheckReport& report) {
    Json j;
    j["tolerance"] = tolerance_to_json(report.tolerance);
    Json checks = Json::array();
    for (const Check& c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["lhs"] = real_field(c.lhs, c.scalar);
        cj["rhs"] = real_field(c.rhs, c.scalar);
        cj["margin"] = c.margin;
        cj["passed"] = c.passed;
        if (c.first_failure) cj["first_failure"] = *c.first_failure + 1;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (!report.warnings.empty()) j["warnings"] = report.warnings;
    j["passed"] = report.passed();
    return j;
}

Json generator_spec_to_json(const GeneratorSpec& spec) {
    return {{"seed", spec.seed}, {"alpha", spec.alpha}, {"n", spec.n}, {"rank", spec.rank}, {"scale", spec.scale}};
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
    if (!out) throw InputError("failed while writing '" + path.string() + "'");
}

}  // namespace hblock
