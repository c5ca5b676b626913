#pragma once

#include <vector>

// The worked (18,5)-CZCP example: q=4, m=5, pi=(1,0,2), c=0.
namespace example1 {

inline const std::vector<int> kA{0, 0, 0, 0, 2, 0, 2, 0, 0, 2, 2, 0, 2, 2, 0, 0, 0, 2};
inline const std::vector<int> kB{0, 0, 0, 0, 2, 2, 0, 2, 2, 2, 2, 0, 2, 0, 2, 2, 2, 0};
inline const std::vector<int> kC{0, 2, 2, 2, 0, 2, 0, 2, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0};
inline const std::vector<int> kD{0, 2, 2, 2, 0, 0, 2, 0, 0, 2, 2, 0, 2, 0, 2, 2, 2, 2};

// Published |C(a,d)(tau) + C(b,c)(tau)| listing. The golden tau axis runs
// opposite to the correlation definition: entry k corresponds to tau = 17 - k.
inline const std::vector<int> kMag{0, 0, 0, 0, 0, 4, 0,  4, 8, 0, 12, 0, 4, 4, 4, 4, 12, 4,
                                   4, 4, 12, 4, 4, 0, 12, 0, 0, 4, 8, 4, 0, 0, 0,  0, 0};

inline const std::vector<int> kPi{1, 0, 2};

}  // namespace example1
