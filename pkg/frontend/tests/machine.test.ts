import { describe, expect, it } from "vitest";
import { machineMatrixLine } from "../src/machine";

// These strings must match the CLI's machine output byte for byte:
// sorted keys, no spaces, integer entries.
describe("machineMatrixLine", () => {
  it("serializes the worked 2x2 example exactly", () => {
    expect(machineMatrixLine("C", [[-1, 1], [0, 1]])).toBe(
      '{"name":"C","rows":[[-1,1],[0,1]]}',
    );
  });

  it("serializes the [1,2,1] endpoint exactly", () => {
    expect(machineMatrixLine("C", [[0, -1], [-1, 0]])).toBe(
      '{"name":"C","rows":[[0,-1],[-1,0]]}',
    );
  });

  it("keeps name before rows regardless of matrix size", () => {
    expect(machineMatrixLine("B", [[0]])).toBe('{"name":"B","rows":[[0]]}');
    expect(
      machineMatrixLine("G", [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
      ]),
    ).toBe('{"name":"G","rows":[[1,0,0],[0,1,0],[0,0,1]]}');
  });
});
