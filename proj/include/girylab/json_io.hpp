#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "girylab/convex.hpp"
#include "girylab/factorization.hpp"
#include "girylab/giry.hpp"

namespace girylab {

/// A structure map given extensionally: evaluation is table lookup by the
/// canonical measure key, so only listed measures can be evaluated.
struct AlgebraTable {
    std::string space_name;
    std::map<std::string, Point> h;
};

struct ModelFile {
    std::map<std::string, FinMeasSpace> spaces;
    std::map<std::string, Prob> measures;
    std::map<std::string, Kernel> kernels;
    std::map<std::string, MeasurableMap> maps;
    std::map<std::string, ConvexSpace> convex;
    std::map<std::string, AffineMap> affine;
    std::map<std::string, ConvexMeasure> cmeasures;
    std::map<std::string, AlgebraTable> algebras;
};

ModelFile parse_model(const nlohmann::json& j);
ModelFile load_model(const std::string& path);

FinMeasSpace parse_space(const nlohmann::json& j);
Prob parse_measure(const nlohmann::json& j, const std::map<std::string, FinMeasSpace>& spaces);
Kernel parse_kernel(const nlohmann::json& j, const std::map<std::string, FinMeasSpace>& spaces);
ConvexSpace parse_convex(const nlohmann::json& j);
Elem parse_elem(const ConvexSpace& a, const nlohmann::json& j);

nlohmann::json space_json(const FinMeasSpace& x);
nlohmann::json measure_json(const Prob& p, const std::string& space_name);
nlohmann::json kernel_json(const Kernel& k, const std::string& dom_name,
                           const std::string& cod_name);
nlohmann::json elem_json(const Elem& e);

/// Canonical wire key of a measure: nonzero weights by atom key.
std::string prob_key(const Prob& p);

/// Sorted keys (nlohmann object default), two-space indent, trailing LF.
std::string canonical_dump(const nlohmann::json& j);

} // namespace girylab
