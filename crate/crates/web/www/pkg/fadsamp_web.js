/* @ts-self-types="./fadsamp_web.d.ts" */

/**
 * One evaluation of `w(z)`.
 */
export class Evaluation {
    static __wrap(ptr) {
        const obj = Object.create(Evaluation.prototype);
        obj.__wbg_ptr = ptr;
        EvaluationFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        EvaluationFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_evaluation_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get im() {
        const ret = wasm.__wbg_get_evaluation_im(this.__wbg_ptr);
        return ret;
    }
    /**
     * `log10` of the larger relative part error against the reference, or
     * NaN outside the reference window.
     * @returns {number}
     */
    get log10_error() {
        const ret = wasm.__wbg_get_evaluation_log10_error(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get re() {
        const ret = wasm.__wbg_get_evaluation_re(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {boolean}
     */
    get reflected() {
        const ret = wasm.__wbg_get_evaluation_reflected(this.__wbg_ptr);
        return ret !== 0;
    }
    /**
     * `0` continued fraction, `1` shifted rational form, `2` pole-free form.
     * @returns {number}
     */
    get regime() {
        const ret = wasm.__wbg_get_evaluation_regime(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set im(arg0) {
        wasm.__wbg_set_evaluation_im(this.__wbg_ptr, arg0);
    }
    /**
     * `log10` of the larger relative part error against the reference, or
     * NaN outside the reference window.
     * @param {number} arg0
     */
    set log10_error(arg0) {
        wasm.__wbg_set_evaluation_log10_error(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set re(arg0) {
        wasm.__wbg_set_evaluation_re(this.__wbg_ptr, arg0);
    }
    /**
     * @param {boolean} arg0
     */
    set reflected(arg0) {
        wasm.__wbg_set_evaluation_reflected(this.__wbg_ptr, arg0);
    }
    /**
     * `0` continued fraction, `1` shifted rational form, `2` pole-free form.
     * @param {number} arg0
     */
    set regime(arg0) {
        wasm.__wbg_set_evaluation_regime(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Evaluation.prototype[Symbol.dispose] = Evaluation.prototype.free;

/**
 * What [`render_field`] colours.
 * @enum {0 | 1 | 2 | 3}
 */
export const FieldMode = Object.freeze({
    /**
     * Hue from `arg w`, lightness from `log |w|`.
     */
    Phase: 0, "0": "Phase",
    /**
     * Which evaluator serves each pixel.
     */
    Regime: 1, "1": "Regime",
    /**
     * `log10` relative error of the real part, `-17..-11`.
     */
    ErrorRe: 2, "2": "ErrorRe",
    /**
     * `log10` relative error of the imaginary part, `-17..-11`.
     */
    ErrorIm: 3, "3": "ErrorIm",
});

/**
 * Evaluates `w(x + iy)`.
 * @param {number} x
 * @param {number} y
 * @returns {Evaluation}
 */
export function evaluate(x, y) {
    const ret = wasm.evaluate(x, y);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Evaluation.__wrap(ret[0]);
}

/**
 * Renders `mode` over `[xmin, xmax] x [ymin, ymax]` as `width * height`
 * RGBA pixels, top row first (largest `y`).
 * @param {FieldMode} mode
 * @param {number} xmin
 * @param {number} xmax
 * @param {number} ymin
 * @param {number} ymax
 * @param {number} width
 * @param {number} height
 * @returns {Uint8Array}
 */
export function render_field(mode, xmin, xmax, ymin, ymax, width, height) {
    const ret = wasm.render_field(mode, xmin, xmax, ymin, ymax, width, height);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
    return v1;
}

/**
 * `K(x, y)` at `n` evenly spaced `x` in `[xmin, xmax]`.
 * @param {number} xmin
 * @param {number} xmax
 * @param {number} n
 * @param {number} y
 * @returns {Float64Array}
 */
export function voigt_profile(xmin, xmax, n, y) {
    const ret = wasm.voigt_profile(xmin, xmax, n, y);
    if (ret[3]) {
        throw takeFromExternrefTable0(ret[2]);
    }
    var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
    wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
    return v1;
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./fadsamp_web_bg.js": import0,
    };
}

const EvaluationFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_evaluation_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

function getArrayU8FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getUint8ArrayMemory0().subarray(ptr / 1, ptr / 1 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('fadsamp_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
