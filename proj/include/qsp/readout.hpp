#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsp/family.hpp"
#include "qsp/state.hpp"

namespace qsp {

// Final X-basis rotation plus the map from solution labels to the X basis
// strings they should land on.
struct ReadoutUnitary {
    Matrix matrix;
    std::map<std::string, std::string> label_map;
};

// Common normalized X-conditional per correlation label, extracted from the
// post-evaluation state with the V factor removed. Raises label-incoherence
// when two members sharing a label disagree beyond a phase, separation when
// labels are not orthogonal, model-mismatch when V is not an exact factor.
std::map<std::string, std::vector<cplx>> conditional_x_states(const StateVector& state,
                                                              const FunctionFamily& family);

// Unitary sending each conditional to its target basis string; the free
// directions are filled by a Gram-Schmidt sweep over unused computational
// basis vectors in increasing order. Conditional phases are normalized so the
// first nonzero entry is real positive, which fixes the matrix completely.
ReadoutUnitary synthesize_readout(const std::map<std::string, std::vector<cplx>>& conditionals,
                                  const std::map<std::string, std::string>& label_map);

// True iff, after rotating X, every K outcome leaves X in a point mass on
// label_map(correlation label).
bool verify_correlation(const StateVector& state, const ReadoutUnitary& readout, const FunctionFamily& family);

// The rotation each catalog family's standard construction specifies:
// Hadamard on X for the table problems, the reflection about the uniform
// vector for locate problems.
ReadoutUnitary standard_readout(const FunctionFamily& family);

// swap(01,10) after Hadamard: the single-query period variant's readout
ReadoutUnitary simon_swap_readout(const FunctionFamily& family);

// identity label -> target map over the family's correlation labels
std::map<std::string, std::string> identity_label_map(const FunctionFamily& family);

} // namespace qsp
