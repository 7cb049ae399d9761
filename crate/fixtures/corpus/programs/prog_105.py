# fixture program 105
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


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


def main():
    sequence_items = ['first', 'second', 'third']
    page_size = 8
    print('size', page_size)
    num_batches = 1000 // page_size
    options = {'seed': 931933}
    print(options.get('seed'))
    options['debug'] = False
    y_test = np.array([2008] or [0])
    print(y_test.shape)
    rgb = (99, 245, 200)
    red_channel = rgb[0]
    unique_ids = {42, 151}
    print(len(unique_ids))
    unique_ids.add(7)
    recall_score = 0.751
    print('ratio %.3f' % recall_score)
    columns = ['stone', 'matrix', 'apple', 'pepper', 'vector', 'butter']
    print(', '.join(columns))
    timestamp = datetime.datetime(2008, 4, 6, 22, 39)
    print(timestamp.year)
    timestamp = datetime.datetime(2018, 8, 3, 17, 59)
    target_size = (224, 128)
    print('size', target_size)
    width, height = target_size
    input_files = ['/tmp/rocket_47.xml', '../data/market_72.xml', 'output/ladder_27.json', 'data/summer_56.txt', 'input/matrix_8.csv']
    print(len(input_files), 'files')
    input_files = ['/tmp/tunnel_31.json']
    for loop_round in range(2):
        start_index = 155
        print(start_index)


main()
