#pragma once

#include "mpm/io.hpp"

#include <string>

namespace fixtures {

inline const char* stability_h0_f = R"(fpm 1
field 2
params 2
rows 2
0 0
0 0
cols 3
1 4 : 1 1
3 3 : 1 1
4 1 : 1 1
)";

inline const char* stability_h0_g = R"(fpm 1
field 2
params 2
rows 2
0 0
0 0
cols 3
1 4 : 1 1
2 2 : 1 1
4 1 : 1 1
)";

inline const char* stability_h1_f = "fpm 1\nfield 2\nparams 2\nrows 2\n3 4\n4 3\ncols 0\n";
inline const char* stability_h1_g = "fpm 1\nfield 2\nparams 2\nrows 2\n2 4\n4 2\ncols 0\n";

// [1; -1] over F_3 with rows (0,-1), (-1,0) and column (0,0).
inline const char* triangle_m = "fpm 1\nfield 3\nparams 2\nrows 2\n0 -1\n-1 0\ncols 1\n0 0 : 0 1 1 2\n";
inline const char* free_origin = "fpm 1\nfield 3\nparams 2\nrows 1\n0 0\ncols 0\n";
inline const char* free_10 = "fpm 1\nfield 3\nparams 2\nrows 1\n10 10\ncols 0\n";

inline const char* stability_complex_f = R"(cwf 1
field 2
params 2
u 0 0 0 :
w 0 0 0 :
a 1 1 4 : u 1 w 1
b 1 3 3 : u 1 w 1
c 1 4 1 : u 1 w 1
)";

inline const char* stability_complex_g = R"(cwf 1
field 2
params 2
u 0 0 0 :
w 0 0 0 :
a 1 1 4 : u 1 w 1
b 1 2 2 : u 1 w 1
c 1 4 1 : u 1 w 1
)";

inline mpm::Presentation load(const char* text) { return mpm::parse_presentation(text); }

}  // namespace fixtures
