/* gtopx shared-library interface
 *
 * Ten interplanetary trajectory benchmark instances behind one call.
 * All reals are IEEE-754 doubles (km/s for velocity objectives, days for
 * times of flight); integers are 32-bit.  Both functions are reentrant and
 * may be called concurrently from any number of threads.
 *
 * Status codes (stable across versions):
 *   0  success
 *   1  unknown benchmark id (valid ids: 1..10)
 *   2  dimension error
 *   3  evaluation failure (the trajectory model could not evaluate x)
 *   4  invalid integer slot (fly-by planet outside 1..9)
 *
 * On a non-zero status the contents of the output buffers are unspecified.
 *
 * The library embeds a Python runtime; the gtopx package must be importable
 * in the environment that loads the library (set PYTHONPATH accordingly
 * when loading from a plain C program).
 */

#ifndef GTOPX_H
#define GTOPX_H

#ifdef __cplusplus
extern "C" {
#endif

/* Evaluate benchmark instance `benchmark` at decision vector `x`.
 *
 * x: input, length n         (see gtopx_info)
 * f: output, length o        (objective values)
 * g: output, length m        (constraints, feasible iff every entry >= 0;
 *                             pass any valid pointer when m is 0)
 */
int gtopx(int benchmark, double *f, double *g, const double *x);

/* Dimensions of one benchmark instance: number of objectives o, decision
 * variables n, constraints m, and integer decision variables n_int (the
 * final n_int slots of x; they are rounded to the nearest planet id). */
int gtopx_info(int benchmark, int *o, int *n, int *m, int *n_int);

#ifdef __cplusplus
}
#endif

#endif /* GTOPX_H */
