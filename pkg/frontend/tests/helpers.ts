/**
 * Test support: recorded service responses as raw text, plus regex
 * extraction of number lexemes straight from those bytes. Extraction
 * deliberately bypasses the console's own JSON parser so the contract
 * tests compare rendered output against the wire bytes, not against
 * whatever the parser produced.
 */

import { readFileSync } from 'node:fs';

export function fixtureText(name: string): string {
  return readFileSync(new URL(`./fixtures/recorded/${name}`, import.meta.url), 'utf8');
}

const NUMBER_LEXEME = '-?(?:0|[1-9][0-9]*)(?:\\.[0-9]+)?(?:[eE][+-]?[0-9]+)?';

/** First number lexeme stored under the given key, exactly as transmitted. */
export function numberLexeme(text: string, key: string): string {
  const match = text.match(new RegExp(`"${key}"\\s*:\\s*(${NUMBER_LEXEME})`));
  if (match === null) throw new Error(`no numeric lexeme under ${JSON.stringify(key)}`);
  return match[1]!;
}

/** Every number lexeme stored under the given key, in byte order. */
export function numberLexemes(text: string, key: string): string[] {
  const out: string[] = [];
  for (const match of text.matchAll(
    new RegExp(`"${key}"\\s*:\\s*(${NUMBER_LEXEME})`, 'g'),
  )) {
    out.push(match[1]!);
  }
  if (out.length === 0) throw new Error(`no numeric lexemes under ${JSON.stringify(key)}`);
  return out;
}

/** First string value stored under the given key. */
export function stringLexeme(text: string, key: string): string {
  const match = text.match(new RegExp(`"${key}"\\s*:\\s*"((?:[^"\\\\]|\\\\.)*)"`));
  if (match === null) throw new Error(`no string under ${JSON.stringify(key)}`);
  return JSON.parse(`"${match[1]!}"`) as string;
}
