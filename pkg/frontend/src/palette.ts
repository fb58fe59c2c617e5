// Categorical palette for the primary keyword's top-20 context words,
// assigned by rank (rank 1 -> index 0). Grey is reserved for words outside
// the top 20, white for connected-word highlights.

export const PALETTE: readonly string[] = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
  "#aec7e8",
  "#ffbb78",
  "#98df8a",
  "#ff9896",
  "#c5b0d5",
  "#c49c94",
  "#f7b6d2",
  "#dbdb8d",
  "#9edae5",
  "#ad494a",
];

export const GREY = "#BDBDBD";
export const CONNECTED_WHITE = "#FFFFFF";
export const FILLER_COLOR = "#EEEEEE";

// Textual pane colors named by the interaction they mark.
export const KEYWORD_BLUE = "#1565C0";
export const MATCH_CYAN = "#B2EBF2";
export const CLICKED_PINK = "#F48FB1";
