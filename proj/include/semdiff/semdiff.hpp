#ifndef SEMDIFF_SEMDIFF_HPP
#define SEMDIFF_SEMDIFF_HPP

#include "semdiff/canonical.hpp"
#include "semdiff/cd_ast.hpp"
#include "semdiff/cd_check.hpp"
#include "semdiff/cd_flatten.hpp"
#include "semdiff/cd_parser.hpp"
#include "semdiff/cd_printer.hpp"
#include "semdiff/diff.hpp"
#include "semdiff/enumerate.hpp"
#include "semdiff/errors.hpp"
#include "semdiff/evaluate.hpp"
#include "semdiff/filters.hpp"
#include "semdiff/om.hpp"
#include "semdiff/om_text.hpp"
#include "semdiff/universe.hpp"
#include "semdiff/witness.hpp"

#endif
