// Byte-stable serialization matching the CLI's machine output: keys in
// sorted order, no whitespace. JSON.stringify on an object literal with
// the keys already in sorted position and integer entries produces the
// identical byte sequence.

export function machineMatrixLine(name: string, rows: number[][]): string {
  return JSON.stringify({ name, rows });
}
