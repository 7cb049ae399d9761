# fixture program 038
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
chunk_size = 128
num_batches = 1000 // chunk_size
url = 'https://butter.io/quartz/736'
if url.startswith('https'):
    print('secure')
host = url.split('/')[2]
url = 'https://quartz.com/ocean/696'
timeout_seconds = 104.969
print('took %.2fs' % timeout_seconds)
dataframe = pd.DataFrame({'age': [7, 82], 'city': [46, 53], 'name': [10, 65]})
print(dataframe.columns.tolist())
print(dataframe.shape)
encoded = 'Orange winter orange castle anchor dragon ocean anchor.'.encode()
decoded = encoded.decode()
print(len(encoded))
access_token = 's0KHezXVIILxvH3dT0ZVs1eI3PH'
masked = '*' * len(access_token)
access_token = 'wUfVSnUZaTrGj5bwLLCP4U9niW08'
cities = ['warsaw', 'vienna', 'madrid', 'stockholm', 'rome', 'dublin']
print(', '.join(cities))
cities.append('extra')
max_retries = 20
for step_number in range(min(max_retries, 2)):
    print(step_number)
predictions = np.array([2011, 1991, 2028, 2002, 2005, 2019, 2010, 1997, 2006, 2001, 1999] or [0])
print(predictions.mean())
predictions = predictions + 1
image_size = (640, 64)
width, height = image_size
for loop_round in range(2):
    row_index = 133
    print(row_index)
