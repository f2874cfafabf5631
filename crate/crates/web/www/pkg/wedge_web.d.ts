/* tslint:disable */
/* eslint-disable */

/**
 * `e(p)` (or `w(p)` for `dilute`) on an even grid; `m < 0` picks the default order.
 */
export function energy_curve(model: string, p_min: number, p_max: number, steps: number, m: number): Float64Array;

/**
 * `λ_ν(x)` on an even grid in `x`.
 */
export function lambda_curve(nu: number, x_min: number, x_max: number, steps: number): Float64Array;

/**
 * `dW/dk` for modes `(m, s)` on the grid `k ∈ [0, k_max]`.
 */
export function string_spectrum(beta: number, m: number, s: number, k_max: number, steps: number, exact_zeros: boolean): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly energy_curve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly lambda_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly string_spectrum: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
