#pragma once

namespace locwalk {

/// Index bookkeeping for the identification ℓ₂(ℤ)⊗C² ≅ ℓ₂(ℤ):
///   δ_x ⊗ e_− ↦ f_{2x},   δ_x ⊗ e_+ ↦ f_{2x+1}.
/// Every module uses these helpers; the convention appears nowhere else.

enum Spin : int { spin_minus = 0, spin_plus = 1 };

inline long long f_index(long long site, int spin) { return 2 * site + spin; }

inline long long floor_div2(long long a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

inline long long site_of(long long f) { return floor_div2(f); }
inline int spin_of(long long f) { return static_cast<int>(f - 2 * site_of(f)); }

/// Pair p groups components (f_{2p−1}, f_{2p}); transfer matrices map pair p
/// to pair p+1.
inline long long pair_of(long long f) { return floor_div2(f + 1); }
/// 0 for the odd (first) slot of its pair, 1 for the even slot.
inline int pair_slot(long long f) { return (f % 2 != 0) ? 0 : 1; }

/// The companion index m̂: m−1 for even m, m+1 for odd m.
inline long long companion_index(long long m) { return (m % 2 == 0) ? m - 1 : m + 1; }

}  // namespace locwalk
