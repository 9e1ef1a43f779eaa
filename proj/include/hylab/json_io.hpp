#pragma once

#include "hylab/funcspace.hpp"
#include "hylab/measures.hpp"

#include <string>

namespace hylab {

/// {"kind":"expmono","alpha":..,"beta":[re,im],"coef":[re,im]}
/// {"kind":"simple","breaks":[..],"values":[[re,im],..]}
/// {"kind":"sampled","grid":[..],"values":[[re,im],..]}
/// Unknown keys are rejected.
FunctionSpec function_from_json(const std::string& text);
std::string function_to_json(const FunctionSpec& f);

/// {"pieces":[[[x,y],...],...],
///  "class":{"name":"comb","nu":1,"c":1.0,"orientation":"horizontal"}}
/// The class object is optional; boxed curves carry "a":[..] and "b":[..].
CompoundCurve curve_from_json(const std::string& text);
std::string curve_to_json(const CompoundCurve& c);

ProjectionCertificate certificate_from_json(const std::string& text);
std::string certificate_to_json(const ProjectionCertificate& cert);

std::string read_file(const std::string& path);

} // namespace hylab
