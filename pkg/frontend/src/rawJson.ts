/**
 * JSON parsing that keeps every number exactly as the service sent it.
 *
 * JSON.parse converts numbers to doubles, and re-formatting a double can
 * change its text: the service writes "1e-07" where JS would print "1e-7",
 * and decimals with more digits than a double holds would silently shrink.
 * The console never computes with service numbers, it only displays them,
 * so numbers are kept as their original lexemes.
 */

export class RawNumber {
  constructor(readonly text: string) {}

  toString(): string {
    return this.text;
  }
}

export type RawValue =
  | null
  | boolean
  | string
  | RawNumber
  | RawValue[]
  | RawObject;

export interface RawObject {
  [key: string]: RawValue;
}

const NUMBER = /^-?(?:0|[1-9][0-9]*)(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?/;

class Scanner {
  pos = 0;

  constructor(private readonly text: string) {}

  fail(why: string): never {
    throw new SyntaxError(`${why} at position ${this.pos}`);
  }

  skipWhitespace(): void {
    while (this.pos < this.text.length) {
      const ch = this.text[this.pos];
      if (ch === ' ' || ch === '\t' || ch === '\n' || ch === '\r') {
        this.pos += 1;
      } else {
        break;
      }
    }
  }

  peek(): string {
    if (this.pos >= this.text.length) this.fail('unexpected end of input');
    return this.text[this.pos]!;
  }

  expect(ch: string): void {
    if (this.text[this.pos] !== ch) this.fail(`expected ${JSON.stringify(ch)}`);
    this.pos += 1;
  }

  atEnd(): boolean {
    return this.pos >= this.text.length;
  }

  value(): RawValue {
    this.skipWhitespace();
    const ch = this.peek();
    if (ch === '{') return this.object();
    if (ch === '[') return this.array();
    if (ch === '"') return this.string();
    if (ch === 't' || ch === 'f' || ch === 'n') return this.literal();
    return this.number();
  }

  object(): RawObject {
    this.expect('{');
    const out: RawObject = {};
    this.skipWhitespace();
    if (this.peek() === '}') {
      this.pos += 1;
      return out;
    }
    for (;;) {
      this.skipWhitespace();
      const key = this.string();
      this.skipWhitespace();
      this.expect(':');
      out[key] = this.value();
      this.skipWhitespace();
      const ch = this.peek();
      if (ch === ',') {
        this.pos += 1;
        continue;
      }
      this.expect('}');
      return out;
    }
  }

  array(): RawValue[] {
    this.expect('[');
    const out: RawValue[] = [];
    this.skipWhitespace();
    if (this.peek() === ']') {
      this.pos += 1;
      return out;
    }
    for (;;) {
      out.push(this.value());
      this.skipWhitespace();
      const ch = this.peek();
      if (ch === ',') {
        this.pos += 1;
        continue;
      }
      this.expect(']');
      return out;
    }
  }

  string(): string {
    if (this.peek() !== '"') this.fail('expected string');
    const start = this.pos;
    this.pos += 1;
    while (this.pos < this.text.length) {
      const ch = this.text[this.pos];
      if (ch === '\\') {
        this.pos += 2;
        continue;
      }
      if (ch === '"') {
        this.pos += 1;
        // escape handling is standard; reuse the platform decoder
        return JSON.parse(this.text.slice(start, this.pos)) as string;
      }
      this.pos += 1;
    }
    this.fail('unterminated string');
  }

  literal(): boolean | null {
    for (const [word, value] of [
      ['true', true],
      ['false', false],
      ['null', null],
    ] as const) {
      if (this.text.startsWith(word, this.pos)) {
        this.pos += word.length;
        return value;
      }
    }
    this.fail('unexpected token');
  }

  number(): RawNumber {
    const match = NUMBER.exec(this.text.slice(this.pos));
    if (!match) this.fail('unexpected token');
    this.pos += match[0].length;
    return new RawNumber(match[0]);
  }
}

export function rawParse(text: string): RawValue {
  const scanner = new Scanner(text);
  const value = scanner.value();
  scanner.skipWhitespace();
  if (!scanner.atEnd()) scanner.fail('trailing content');
  return value;
}

/** Accessors: narrow a RawValue or throw with a useful message. */

export function asObject(value: RawValue, what = 'value'): RawObject {
  if (
    value === null ||
    typeof value !== 'object' ||
    Array.isArray(value) ||
    value instanceof RawNumber
  ) {
    throw new TypeError(`${what} is not an object`);
  }
  return value;
}

export function asArray(value: RawValue, what = 'value'): RawValue[] {
  if (!Array.isArray(value)) throw new TypeError(`${what} is not an array`);
  return value;
}

export function asString(value: RawValue, what = 'value'): string {
  if (typeof value !== 'string') throw new TypeError(`${what} is not a string`);
  return value;
}

export function asBoolean(value: RawValue, what = 'value'): boolean {
  if (typeof value !== 'boolean') throw new TypeError(`${what} is not a boolean`);
  return value;
}

/** The number's exact source text. */
export function asNumberText(value: RawValue, what = 'value'): string {
  if (!(value instanceof RawNumber)) throw new TypeError(`${what} is not a number`);
  return value.text;
}

export function field(value: RawValue, key: string): RawValue {
  const obj = asObject(value, `container of ${JSON.stringify(key)}`);
  if (!(key in obj)) throw new TypeError(`missing field ${JSON.stringify(key)}`);
  return obj[key]!;
}

export function optionalField(value: RawValue, key: string): RawValue | undefined {
  const obj = asObject(value, `container of ${JSON.stringify(key)}`);
  return key in obj ? obj[key] : undefined;
}
