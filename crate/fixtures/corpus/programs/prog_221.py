# fixture program 221
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
    weight_decay = 0.05
    step_value = weight_decay * 0.5
    weight_decay = 0.0995
    year_range = list(range(1955, 1962))
    print(len(year_range))
    best_model = None
    if best_model is None:
        print('empty')
    distances = [77.88]
    distances.sort()
    print(max(distances))
    authors = ['warsaw', 'dublin']
    authors.append('extra')
    ages = [36, 49]
    print(len(ages))
    for element in ages:
        print(element)
    files = ['results/pepper_99.json', 'data/rabbit_35.parquet', 'output/silver_28.csv', 'results/stone_11.tsv']
    print(len(files), 'files')
    for element in files:
        print(os.path.basename(element))
    start_year = 1999
    if start_year > 2000:
        print('recent')
    token = 'svUWHJPTGlHs955B'
    print('key length', len(token))
    token = 'Lol7vnjut9RNRUIaNVVAwkHf'
    birthday = '2004-05-26'
    print('date', birthday)
    color_rgb = (226, 50, 38)
    red_channel = color_rgb[0]
    color_rgb = (245, 163, 251)
    chunk_size = 256
    num_batches = 1000 // chunk_size
    predictor = LinearModel(3)
    prediction = predictor.predict([1, 2, 3])
    preprocess = helper
    print(callable(preprocess))
    preprocess = lambda x: x + 1
    tmp = 'Island candle signal falcon.'
    tmp = 'Stone quartz garden vector report summer river'
    for loop_round in range(4):
        delay = 107.394
        print(delay)


main()
