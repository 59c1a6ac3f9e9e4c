import { describe, expect, it } from 'vitest';

import {
  RawNumber,
  asArray,
  asBoolean,
  asNumberText,
  asObject,
  asString,
  field,
  optionalField,
  rawParse,
} from '../src/rawJson.js';

describe('rawParse number lexemes', () => {
  // The whole point of the parser: responses produced by a different
  // runtime keep their exact spelling, even where this runtime would
  // print the same value differently.
  const spellings = [
    '1e-07', // Python prints this; JS would print 1e-7
    '1e-7',
    '1.0', // JS would print 1
    '-0.5',
    '0.0049590353762631835',
    '4.004239431578184',
    '141565965', // integers survive too
    '2.0e+3',
    '-0.0',
  ];

  for (const text of spellings) {
    it(`keeps ${text} verbatim`, () => {
      const value = rawParse(`{"x": ${text}}`);
      const x = field(value, 'x');
      expect(x).toBeInstanceOf(RawNumber);
      expect(asNumberText(x)).toBe(text);
    });
  }

  it('keeps every element of a number array verbatim', () => {
    const value = rawParse('[1.10, 2.200, 3e0]');
    expect(asArray(value).map((v) => asNumberText(v))).toEqual(['1.10', '2.200', '3e0']);
  });
});

describe('rawParse structure', () => {
  it('parses nested objects and arrays', () => {
    const value = rawParse('{"a": {"b": [true, false, null, "s"]}}');
    const items = asArray(field(field(value, 'a'), 'b'));
    expect(asBoolean(items[0]!)).toBe(true);
    expect(asBoolean(items[1]!)).toBe(false);
    expect(items[2]).toBeNull();
    expect(asString(items[3]!)).toBe('s');
  });

  it('parses empty containers', () => {
    expect(asArray(rawParse('[]'))).toEqual([]);
    expect(Object.keys(asObject(rawParse('{}')))).toEqual([]);
  });

  it('decodes string escapes the way JSON defines them', () => {
    const value = rawParse('{"s": "line\\nbreak \\"q\\" \\u00e9 \\ud83d\\ude00 back\\\\slash"}');
    expect(asString(field(value, 's'))).toBe('line\nbreak "q" é \u{1f600} back\\slash');
  });

  it('accepts leading and trailing whitespace', () => {
    expect(asBoolean(rawParse('  true  '))).toBe(true);
  });
});

describe('rawParse rejections', () => {
  const bad = [
    ['{"a": 1} extra', 'trailing content'],
    ['{"a" 1}', 'missing colon'],
    ['{"a": 1,}', 'trailing comma'],
    ['[1, 2', 'unterminated array'],
    ['"open', 'unterminated string'],
    ['NaN', 'not a JSON literal'],
    ['Infinity', 'not a JSON literal'],
    ['01', 'leading zero'],
    ['{a: 1}', 'unquoted key'],
    ['', 'empty input'],
  ] as const;

  for (const [text, why] of bad) {
    it(`rejects ${JSON.stringify(text)} (${why})`, () => {
      expect(() => rawParse(text)).toThrow(SyntaxError);
    });
  }
});

describe('typed accessors', () => {
  const value = rawParse('{"n": 1.50, "s": "hi", "b": true, "list": [], "nul": null}');

  it('field throws on a missing key, optionalField does not', () => {
    expect(() => field(value, 'absent')).toThrow(/absent/);
    expect(optionalField(value, 'absent')).toBeUndefined();
    expect(optionalField(value, 'n')).toBeInstanceOf(RawNumber);
  });

  it('each accessor rejects the wrong shape', () => {
    expect(() => asNumberText(field(value, 's'))).toThrow(TypeError);
    expect(() => asString(field(value, 'n'))).toThrow(TypeError);
    expect(() => asBoolean(field(value, 'nul'))).toThrow(TypeError);
    expect(() => asObject(field(value, 'list'))).toThrow(TypeError);
    expect(() => asArray(field(value, 'b'))).toThrow(TypeError);
  });

  it('RawNumber prints its lexeme', () => {
    expect(String(new RawNumber('1.250'))).toBe('1.250');
  });
});
