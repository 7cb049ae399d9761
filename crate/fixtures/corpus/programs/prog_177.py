# fixture program 177
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
series = pd.Series([74.59])
print(series.mean())
resolution = (32, 480)
print('size', resolution)
width, height = resolution
features = np.zeros((42, 21))
print(features.shape)
features = np.zeros((3, 3))
epsilon = 0.01
print('lr', epsilon)
epsilon = 0.3
handle = io.StringIO('Summer wizard needle anchor stone tunnel signal zebra cloud.')
first_line = handle.readline()
handle.seek(0)
handle = io.StringIO('Summer yellow vector planet market?')
callback = lambda x: x * 2
print(callable(callback))
col_name = 'meadow_id'
print('column', col_name)
lookup = {col_name: 0}
col_name = 'violet'
log_files = ['output/harbor_55.log', 'data/candle_18.parquet', 'results/saddle_74.parquet', 'output/river_80.json']
print(len(log_files), 'files')
log_files = ['data/market_70.csv', 'data/engine_66.csv', '/tmp/meadow_4.txt', '/tmp/cloud_1.tsv', 'data/planet_16.json']
payload = 'Forest needle bridge pepper needle rabbit market market.'.encode()
print(len(payload))
for loop_round in range(2):
    altitude = -4.914
    print(altitude)
