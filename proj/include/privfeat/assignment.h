// privfeat/assignment.h

// Copyright 2026  privfeat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVFEAT_ASSIGNMENT_H_
#define PRIVFEAT_ASSIGNMENT_H_

#include <vector>

namespace privfeat {

/// Maximum-weight one-to-one assignment between the rows and columns of a
/// rectangular non-negative weight matrix (Hungarian algorithm, O(n^3) on
/// the padded square). Returns, per row, the matched column or -1.
std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>> &weight);

}  // namespace privfeat

#endif  // PRIVFEAT_ASSIGNMENT_H_
