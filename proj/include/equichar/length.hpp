#pragma once

#include <optional>
#include <vector>

#include "equichar/moduli.hpp"
#include "equichar/serialize.hpp"

namespace equichar {

// w(f): the largest partition under `compare` whose Schur coefficient is
// non-zero. A q-graded input counts a term as present when its coefficient
// polynomial is non-zero; select a q-degree first with q_component for the
// per-degree value. Throws on zero.
Partition leading_partition(const SymFunc& f);

// Largest number of parts among the Schur constituents. Throws on zero.
int max_length(const SymFunc& f);

// min(i+1, n-i-2), the sharp bound on the length of H^{2i}.
int length_bound(int n, int i);

// lambda'_1 = lambda'_2 = min(i+1, n-i-2) and lambda'_3 >= 1.
bool star_property(const Partition& lambda, int n, int i);

// Degrees i in {(n-4)/2, (n-2)/2} (n even) or {(n-3)/2} (n odd).
bool in_exceptional_degrees(int n, int i);
// (4,2^{(n-4)/2}) or (4,2^{(n-5)/2},1) when i is exceptional, else nullopt.
// Also nullopt for n < 4, where the shape is undefined.
std::optional<Partition> exceptional_lambda(int n, int i);

// Closed form for w(s_mu o s_(m)): ((m-1)^k) + mu for odd m and
// ((m-1)^k) + mu' for even m, with k = |mu|.
Partition plethysm_leading_closed_form(const Partition& mu, int m);

struct LengthRow {
    int i = 0;
    int length = 0;
    int bound = 0;
    Partition w;
    // The star shape is asserted for 1 <= i <= n-4 outside the exceptional
    // degrees; the end rows i = 0, n-3 are length-1 and cannot satisfy it.
    bool star_applies = false;
    bool star = false;
    bool exceptional = false;
    // Coefficient of q^i in the Schur coefficient of lambda_{n,i}.
    std::optional<long> lambda_mult;
    bool ok = false;
};

struct LengthReport {
    int n = 0;
    std::vector<LengthRow> rows;

    bool all_ok() const;
};

LengthReport length_theorem_report(ModuliEngine& engine, int n);

// {"n":8,"rows":[{"i":0,"length":1,"w":[8],"star":false,"lambda_mult":null,...}, ...]}
Json to_json(const LengthReport& report);

}  // namespace equichar
