#ifndef PPT_PPT_HPP
#define PPT_PPT_HPP

#include "circuits.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "exact_algebra.hpp"
#include "graph.hpp"
#include "interlace.hpp"
#include "matrix.hpp"
#include "pivot.hpp"
#include "polynomial.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "scalar.hpp"
#include "set_systems.hpp"
#include "text_io.hpp"

#endif // PPT_PPT_HPP
