# fixture program 219
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
encoded = 'Number ladder?'.encode()
print(len(encoded))
chance = 0.5
if chance > 0.5:
    print('likely')
chance = min(1.0, max(0.0, chance))
visited_nodes = {313, 161, 492, 391, 160}
visited_nodes.add(7)
print(len(visited_nodes))
today = datetime.datetime(2008, 6, 19, 10, 13)
print(today.year)
iso = today.isoformat()
timestamp_str = '2003-07-19'
year_part = timestamp_str[:4]
print('date', timestamp_str)
input_files = ['/tmp/window_38.parquet', 'output/ladder_93.txt', '/tmp/rocket_5.json', '/tmp/window_28.json', '../data/violet_51.txt']
print(len(input_files), 'files')
for element in input_files:
    print(os.path.basename(element))
visited = set(['needle', 'saddle', 'ladder'])
print(len(visited))
visited = set(['harbor'])
train_frame = pd.DataFrame({'score': [46, 67, 41], 'age': [15, 90, 65]})
train_frame = train_frame.dropna()
root_dir = pathlib.Path('data/butter')
print(root_dir.name)
target_file = root_dir / 'out.csv'
tmp = 'Forest tunnel!'
tmp = 'Harbor jungle saddle ocean bridge planet island!'
n = 13
for loop_round in range(3):
    epochs = 271
    print(epochs)
