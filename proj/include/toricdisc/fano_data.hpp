#pragma once

// Generated by tools/embed_fano.py from data/fano/*.json; do not edit.

#include <string_view>
#include <vector>

namespace toricdisc {

struct FanoDocument {
  std::string_view name;
  std::string_view json;
};

inline const std::vector<FanoDocument>& fano_documents() {
  static const std::vector<FanoDocument> docs{
      {"P2", R"json({
  "dim": 2,
  "name": "P2",
  "rays": [
    [1, 0],
    [0, 1],
    [-1, -1]
  ],
  "max_cones": [
    [0, 1],
    [0, 2],
    [1, 2]
  ],
  "pic_basis": [0],
  "provenance": "derived: face fan of the standard simplex; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 1, min c_n(J_1(L)) over A = 0"
}
)json"},
      {"P1xP1", R"json({
  "dim": 2,
  "name": "P1xP1",
  "rays": [
    [1, 0],
    [-1, 0],
    [0, 1],
    [0, -1]
  ],
  "max_cones": [
    [0, 2],
    [0, 3],
    [1, 2],
    [1, 3]
  ],
  "pic_basis": [0, 2],
  "provenance": "derived: product; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 2, min c_n(J_1(L)) over A = 2"
}
)json"},
      {"DS8", R"json({
  "dim": 2,
  "name": "DS8",
  "rays": [
    [1, 0],
    [-1, 1],
    [0, 1],
    [0, -1]
  ],
  "max_cones": [
    [0, 2],
    [0, 3],
    [1, 2],
    [1, 3]
  ],
  "pic_basis": [0, 3],
  "provenance": "derived: P^2 blown up in one point (Hirzebruch F_1); smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 2, min c_n(J_1(L)) over A = 3"
}
)json"},
      {"DS7", R"json({
  "dim": 2,
  "name": "DS7",
  "rays": [
    [1, 0],
    [1, 1],
    [0, 1],
    [-1, 0],
    [-1, -1]
  ],
  "max_cones": [
    [0, 1],
    [0, 4],
    [1, 2],
    [2, 3],
    [3, 4]
  ],
  "pic_basis": [0, 1, 2],
  "provenance": "derived: P^2 blown up in two points; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 12"
}
)json"},
      {"DS6", R"json({
  "dim": 2,
  "name": "DS6",
  "rays": [
    [1, 0],
    [1, 1],
    [0, 1],
    [-1, 0],
    [-1, -1],
    [0, -1]
  ],
  "max_cones": [
    [0, 1],
    [0, 5],
    [1, 2],
    [2, 3],
    [3, 4],
    [4, 5]
  ],
  "pic_basis": [0, 1, 2, 3],
  "provenance": "derived: P^2 blown up in three points; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 4, min c_n(J_1(L)) over A = 12"
}
)json"},
      {"P3", R"json({
  "dim": 3,
  "name": "P3",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1]
  ],
  "max_cones": [
    [0, 1, 2],
    [0, 1, 3],
    [0, 2, 3],
    [1, 2, 3]
  ],
  "pic_basis": [0],
  "provenance": "derived: face fan of the standard simplex; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 1, min c_n(J_1(L)) over A = 0"
}
)json"},
      {"P2xP1", R"json({
  "dim": 3,
  "name": "P2xP1",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [-1, -1, 0],
    [0, 0, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 1, 3],
    [0, 1, 4],
    [0, 2, 3],
    [0, 2, 4],
    [1, 2, 3],
    [1, 2, 4]
  ],
  "pic_basis": [0, 3],
  "provenance": "rays as printed in the source; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 2, min c_n(J_1(L)) over A = 0"
}
)json"},
      {"PP2_O_O2", R"json({
  "dim": 3,
  "name": "PP2_O_O2",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [-1, -1, 2],
    [0, 0, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 1, 3],
    [0, 1, 4],
    [0, 2, 3],
    [0, 2, 4],
    [1, 2, 3],
    [1, 2, 4]
  ],
  "pic_basis": [0, 4],
  "provenance": "derived: projective bundle P_{P^2}(O+O(2)); smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 2, min c_n(J_1(L)) over A = 10"
}
)json"},
      {"PP1_O_O_O1", R"json({
  "dim": 3,
  "name": "PP1_O_O_O1",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [-1, -1, 0],
    [0, 0, 1],
    [0, 1, -1]
  ],
  "max_cones": [
    [0, 1, 3],
    [0, 1, 4],
    [0, 2, 3],
    [0, 2, 4],
    [1, 2, 3],
    [1, 2, 4]
  ],
  "pic_basis": [0, 3],
  "provenance": "rays as printed in the source; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 2, min c_n(J_1(L)) over A = 0"
}
)json"},
      {"PP2_O_O1", R"json({
  "dim": 3,
  "name": "PP2_O_O1",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [-1, -1, 1],
    [0, 0, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 1, 3],
    [0, 1, 4],
    [0, 2, 3],
    [0, 2, 4],
    [1, 2, 3],
    [1, 2, 4]
  ],
  "pic_basis": [0, 4],
  "provenance": "derived: projective bundle P_{P^2}(O+O(1)), P^3 blown up in a point; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 2, min c_n(J_1(L)) over A = 4"
}
)json"},
      {"P1xP1xP1", R"json({
  "dim": 3,
  "name": "P1xP1xP1",
  "rays": [
    [1, 0, 0],
    [-1, 0, 0],
    [0, 1, 0],
    [0, -1, 0],
    [0, 0, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [0, 3, 5],
    [1, 2, 4],
    [1, 2, 5],
    [1, 3, 4],
    [1, 3, 5]
  ],
  "pic_basis": [0, 2, 4],
  "provenance": "derived: product; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 4"
}
)json"},
      {"DS8xP1", R"json({
  "dim": 3,
  "name": "DS8xP1",
  "rays": [
    [1, 0, 0],
    [-1, 1, 0],
    [0, 1, 0],
    [0, -1, 0],
    [0, 0, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [0, 3, 5],
    [1, 2, 4],
    [1, 2, 5],
    [1, 3, 4],
    [1, 3, 5]
  ],
  "pic_basis": [0, 3, 4],
  "provenance": "derived: product; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 8"
}
)json"},
      {"F3_1", R"json({
  "dim": 3,
  "name": "F3_1",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1],
    [1, 1, 1],
    [2, 1, 1]
  ],
  "max_cones": [
    [0, 1, 3],
    [0, 1, 5],
    [0, 2, 3],
    [0, 2, 5],
    [1, 2, 3],
    [1, 2, 4],
    [1, 4, 5],
    [2, 4, 5]
  ],
  "pic_basis": [0, 1, 3],
  "provenance": "derived: P^3 blown up in a point, then along a line in the exceptional divisor; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 90"
}
)json"},
      {"F3_2", R"json({
  "dim": 3,
  "name": "F3_2",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1],
    [1, 1, 0],
    [0, -1, 0]
  ],
  "max_cones": [
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [0, 3, 5],
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 4],
    [2, 3, 5]
  ],
  "pic_basis": [0, 1, 2],
  "provenance": "derived: P^3 blown up in a point and a disjoint line; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 24"
}
)json"},
      {"F3_3", R"json({
  "dim": 3,
  "name": "F3_3",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1],
    [1, 1, 1],
    [1, 1, 0]
  ],
  "max_cones": [
    [0, 2, 3],
    [0, 2, 4],
    [0, 3, 5],
    [0, 4, 5],
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 5]
  ],
  "pic_basis": [0, 2, 3],
  "provenance": "derived: P^3 blown up in a point, then along the strict transform of a line through it; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 18"
}
)json"},
      {"F3_4", R"json({
  "dim": 3,
  "name": "F3_4",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1],
    [1, 1, 0],
    [-1, -1, 0]
  ],
  "max_cones": [
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [0, 3, 5],
    [1, 2, 4],
    [1, 2, 5],
    [1, 3, 4],
    [1, 3, 5]
  ],
  "pic_basis": [0, 2, 4],
  "provenance": "derived: P^3 blown up along two disjoint lines; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 16"
}
)json"},
      {"F3_5", R"json({
  "dim": 3,
  "name": "F3_5",
  "rays": [
    [1, 0, 0],
    [-1, 0, 1],
    [0, 1, 0],
    [0, -1, 1],
    [0, 0, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [0, 3, 5],
    [1, 2, 4],
    [1, 2, 5],
    [1, 3, 4],
    [1, 3, 5]
  ],
  "pic_basis": [0, 2, 5],
  "provenance": "derived: P_{P^1xP^1}(O+O(1,1)); smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 3, min c_n(J_1(L)) over A = 14"
}
)json"},
      {"DS7xP1", R"json({
  "dim": 3,
  "name": "DS7xP1",
  "rays": [
    [1, 0, 0],
    [1, 1, 0],
    [0, 1, 0],
    [-1, 0, 0],
    [-1, -1, 0],
    [0, 0, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 1, 5],
    [0, 1, 6],
    [0, 4, 5],
    [0, 4, 6],
    [1, 2, 5],
    [1, 2, 6],
    [2, 3, 5],
    [2, 3, 6],
    [3, 4, 5],
    [3, 4, 6]
  ],
  "pic_basis": [0, 1, 2, 5],
  "provenance": "derived: product; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 4, min c_n(J_1(L)) over A = 28"
}
)json"},
      {"F4_1", R"json({
  "dim": 3,
  "name": "F4_1",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1],
    [1, 1, 0],
    [-1, -1, 0],
    [1, 1, 1]
  ],
  "max_cones": [
    [0, 2, 5],
    [0, 2, 6],
    [0, 3, 4],
    [0, 3, 5],
    [0, 4, 6],
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 4, 6]
  ],
  "pic_basis": [0, 2, 3, 4],
  "provenance": "derived: P^3 blown up along two disjoint lines, then along an exceptional line; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 4, min c_n(J_1(L)) over A = 78"
}
)json"},
      {"F4_2", R"json({
  "dim": 3,
  "name": "F4_2",
  "rays": [
    [1, 0, 0],
    [-1, 1, 0],
    [0, 1, 0],
    [0, -1, 0],
    [0, 0, 1],
    [0, 0, -1],
    [0, 1, 1]
  ],
  "max_cones": [
    [0, 2, 5],
    [0, 2, 6],
    [0, 3, 4],
    [0, 3, 5],
    [0, 4, 6],
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 4, 6]
  ],
  "pic_basis": [0, 2, 3, 4],
  "provenance": "derived: DS8xP^1 blown up along a curve in a fiber; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 4, min c_n(J_1(L)) over A = 82"
}
)json"},
      {"F4_3", R"json({
  "dim": 3,
  "name": "F4_3",
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1],
    [1, 1, 0],
    [1, 1, 1],
    [0, 0, -1]
  ],
  "max_cones": [
    [0, 2, 3],
    [0, 2, 5],
    [0, 3, 6],
    [0, 4, 5],
    [0, 4, 6],
    [1, 2, 3],
    [1, 2, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6]
  ],
  "pic_basis": [0, 2, 3, 4],
  "provenance": "derived: P^3 blown up along a line, then along two exceptional lines; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 4, min c_n(J_1(L)) over A = 84"
}
)json"},
      {"DS6xP1", R"json({
  "dim": 3,
  "name": "DS6xP1",
  "rays": [
    [1, 0, 0],
    [1, 0, 1],
    [0, 0, 1],
    [-1, 0, 0],
    [-1, 0, -1],
    [0, 0, -1],
    [0, 1, 0],
    [0, -1, 0]
  ],
  "max_cones": [
    [0, 1, 6],
    [0, 1, 7],
    [0, 5, 6],
    [0, 5, 7],
    [1, 2, 6],
    [1, 2, 7],
    [2, 3, 6],
    [2, 3, 7],
    [3, 4, 6],
    [3, 4, 7],
    [4, 5, 6],
    [4, 5, 7]
  ],
  "pic_basis": [0, 1, 2, 3, 7],
  "provenance": "rays as printed in the source; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 5, min c_n(J_1(L)) over A = 24"
}
)json"},
      {"F5_1", R"json({
  "dim": 3,
  "name": "F5_1",
  "rays": [
    [1, 0, 0],
    [1, 0, 1],
    [0, 0, 1],
    [-1, 0, 0],
    [-1, 0, -1],
    [0, 0, -1],
    [0, 1, 0],
    [1, -1, 0]
  ],
  "max_cones": [
    [0, 1, 6],
    [0, 1, 7],
    [0, 5, 6],
    [0, 5, 7],
    [1, 2, 6],
    [1, 2, 7],
    [2, 3, 6],
    [2, 3, 7],
    [3, 4, 6],
    [3, 4, 7],
    [4, 5, 6],
    [4, 5, 7]
  ],
  "pic_basis": [0, 1, 2, 3, 7],
  "provenance": "rays as printed in the source; smooth toric Fano classification (Batyrev, Watanabe-Watanabe); cones: face fan of the rays; checks: smooth, complete, -K ample = yes, rho = 5, min c_n(J_1(L)) over A = 72"
}
)json"},
  };
  return docs;
}

}  // namespace toricdisc
